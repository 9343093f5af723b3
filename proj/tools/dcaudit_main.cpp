#include "dcaudit/audit.hpp"
#include "dcaudit/errors.hpp"
#include "dcaudit/fixture.hpp"
#include "dcaudit/inventory_io.hpp"
#include "dcaudit/report_io.hpp"
#include "dcaudit/telemetry_io.hpp"
#include "dcaudit/training_energy.hpp"
#include "dcaudit/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace dcaudit;

/// "%.2f" with thousands separators, locale-independent.
std::string group_thousands(double value, int decimals = 2)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s = buf;
    const std::size_t dot = s.find('.');
    std::size_t end = dot == std::string::npos ? s.size() : dot;
    const std::size_t first = s.front() == '-' ? 1 : 0;
    for (std::size_t i = end; i > first + 3; ) {
        i -= 3;
        s.insert(i, ",");
    }
    return s;
}

void write_or_print(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw IoError("cannot write '" + out_path + "'");
    }
    out << text;
    if (!out) {
        throw IoError("error writing '" + out_path + "'");
    }
}

struct AuditArgs {
    std::string inventory_path;
    std::string telemetry_path;
    std::string mode = "full";
    std::vector<std::string> window;
    int ashrae_class = 1;
    std::string format = "json";
    std::string out_path;
    std::string aggregation = "mean";
    double equip_eff_threshold = 16.876;
    double rti_tolerance = 5.0;
    std::string thresholds_path;
};

void run_audit_command(const AuditArgs& args)
{
    AuditConfig config;
    config.mode = *audit_mode_from_string(args.mode);
    config.ashrae_class = args.ashrae_class == 2 ? AshraeClass::Class2 : AshraeClass::Class1;
    config.utilization_aggregation = args.aggregation == "max" ? UtilizationAggregation::Max
                                                               : UtilizationAggregation::Mean;
    config.equip_eff_threshold_gflop_per_w = args.equip_eff_threshold;
    config.rti_tolerance_pct = args.rti_tolerance;
    if (!args.thresholds_path.empty()) {
        config.thresholds_override_path = args.thresholds_path;
    }
    if (!args.window.empty()) {
        config.window = AuditWindow{parse_rfc3339(args.window.at(0)),
                                    parse_rfc3339(args.window.at(1))};
    }

    const Inventory inventory = load_inventory(args.inventory_path);
    const TelemetrySet telemetry = load_telemetry(args.telemetry_path);
    const AuditReport report = run_audit(inventory, telemetry, config);
    const ReportFormat format = args.format == "md" ? ReportFormat::Markdown : ReportFormat::Json;
    write_or_print(render(report, format), args.out_path);
}

struct EstimateArgs {
    double gflop = 0.0;
    double gflop_per_watt = 16.876;
    double home_kwh_month = 900.0;
    bool strict_units = false;
};

void run_estimate(const EstimateArgs& args)
{
    const EstimatorParams params{args.gflop_per_watt, args.home_kwh_month};
    const double kwh = consumption_kwh({"workload", args.gflop}, params, args.strict_units);
    const double homes = homes_powered(kwh, params);
    std::cout << "consumption: " << group_thousands(kwh) << " kWh\n";
    std::cout << "homes powered for one year: " << group_thousands(homes) << "\n";
    if (args.strict_units) {
        std::cout << "(strict units: the GFLOP / (GFLOP/W) quotient read as watt-seconds, "
                     "3600x smaller than the published arithmetic)\n";
    }
}

struct SimulateArgs {
    std::uint64_t seed = 1;
    std::string out_dir;
    FixtureProfile profile;
    std::vector<std::string> rates;
    std::string window_start;
    std::string window_end;
};

void run_simulate(SimulateArgs& args)
{
    args.profile.seed = args.seed;
    if (!args.window_start.empty()) {
        args.profile.window_start = parse_rfc3339(args.window_start);
    }
    if (!args.window_end.empty()) {
        args.profile.window_end = parse_rfc3339(args.window_end);
    }
    for (const std::string& spec : args.rates) {
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("--rate needs ITEM=FRACTION, got '" + spec + "'");
        }
        try {
            args.profile.compliance_rates[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidInput("--rate needs a numeric fraction, got '" + spec + "'");
        }
    }

    const Fixture fixture = generate(args.profile);
    const std::filesystem::path dir(args.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
    write_inventory(fixture.inventory, dir / "inventory.json");
    write_telemetry(fixture.telemetry, dir / "telemetry.csv");
    std::ofstream profile_out(dir / "profile.json");
    if (!profile_out) {
        throw IoError("cannot write profile.json");
    }
    profile_out << profile_json(args.profile);
    std::cerr << "wrote " << (dir / "inventory.json").string() << ", "
              << (dir / "telemetry.csv").string() << ", " << (dir / "profile.json").string()
              << "\n";
}

void run_validate(const std::string& inventory_path, const std::string& telemetry_path)
{
    const Inventory inventory = load_inventory(inventory_path);
    std::size_t aisles = 0;
    std::size_t racks = 0;
    std::size_t servers = 0;
    for (const Room& room : inventory.rooms) {
        aisles += room.aisles.size();
        for (const Aisle& aisle : room.aisles) {
            racks += aisle.racks.size();
            for (const Rack& rack : aisle.racks) {
                servers += rack.servers.size();
            }
        }
    }
    std::cout << "inventory OK: " << inventory.rooms.size() << " room(s), " << aisles
              << " aisle(s), " << racks << " rack(s), " << servers << " server(s)\n";
    if (!telemetry_path.empty()) {
        const TelemetrySet telemetry = load_telemetry(telemetry_path);
        std::size_t points = 0;
        for (const auto& [id, series] : telemetry) {
            points += series.points.size();
        }
        std::cout << "telemetry OK: " << telemetry.size() << " series, " << points
                  << " point(s)\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{std::string(kToolName) + " " + std::string(kToolVersion)
                 + ": data center energy efficiency audits"};
    app.require_subcommand(1);

    AuditArgs audit_args;
    CLI::App* audit_cmd = app.add_subcommand("audit", "Run an energy efficiency audit");
    audit_cmd->add_option("--inventory", audit_args.inventory_path, "Inventory JSON file")
        ->required();
    audit_cmd->add_option("--telemetry", audit_args.telemetry_path, "Telemetry CSV file")
        ->required();
    audit_cmd->add_option("--mode", audit_args.mode, "Audit tier")
        ->check(CLI::IsMember({"full", "lite"}))
        ->capture_default_str();
    audit_cmd->add_option("--window", audit_args.window,
                          "Audit window as two RFC 3339 instants (default: full telemetry span)")
        ->expected(2);
    audit_cmd->add_option("--ashrae-class", audit_args.ashrae_class, "ASHRAE envelope class")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    audit_cmd->add_option("--format", audit_args.format, "Output format")
        ->check(CLI::IsMember({"json", "md"}))
        ->capture_default_str();
    audit_cmd->add_option("--out", audit_args.out_path, "Write the report here (default stdout)");
    audit_cmd->add_option("--utilization-aggregation", audit_args.aggregation,
                          "CPU utilization aggregation")
        ->check(CLI::IsMember({"mean", "max"}))
        ->capture_default_str();
    audit_cmd->add_option("--equip-eff-threshold", audit_args.equip_eff_threshold,
                          "GFLOP/W below which equipment is flagged")
        ->capture_default_str();
    audit_cmd->add_option("--rti-tolerance", audit_args.rti_tolerance,
                          "RTI pass tolerance around 100%, percentage points")
        ->capture_default_str();
    audit_cmd->add_option("--thresholds", audit_args.thresholds_path,
                          "JSON file overriding benchmark thresholds/envelopes");
    audit_cmd->callback([&audit_args] { run_audit_command(audit_args); });

    EstimateArgs estimate_args;
    CLI::App* estimate_cmd =
        app.add_subcommand("estimate", "Estimate training energy from GFLOP");
    estimate_cmd->add_option("--gflop", estimate_args.gflop, "Total training compute in GFLOP")
        ->required();
    estimate_cmd->add_option("--gflop-per-watt", estimate_args.gflop_per_watt,
                             "Assumed hardware efficiency")
        ->capture_default_str();
    estimate_cmd->add_option("--home-kwh-month", estimate_args.home_kwh_month,
                             "Average household consumption per month")
        ->capture_default_str();
    estimate_cmd->add_flag("--strict-units", estimate_args.strict_units,
                           "Dimensionally strict conversion (3600x smaller)");
    estimate_cmd->callback([&estimate_args] { run_estimate(estimate_args); });

    std::string table1_out;
    bool table1_strict = false;
    CLI::App* table1_cmd =
        app.add_subcommand("table1", "Emit the reference model energy table as CSV");
    table1_cmd->add_option("--out", table1_out, "Write CSV here (default stdout)");
    table1_cmd->add_flag("--strict-units", table1_strict, "Dimensionally strict conversion");
    table1_cmd->callback(
        [&table1_out, &table1_strict] { write_or_print(table1_csv({}, table1_strict), table1_out); });

    std::string diff_baseline;
    std::string diff_current;
    std::string diff_format = "md";
    CLI::App* diff_cmd = app.add_subcommand("diff", "Compare two audit reports (JSON)");
    diff_cmd->add_option("--baseline", diff_baseline, "Baseline report JSON")->required();
    diff_cmd->add_option("--current", diff_current, "Current report JSON")->required();
    diff_cmd->add_option("--format", diff_format, "Output format")
        ->check(CLI::IsMember({"json", "md"}))
        ->capture_default_str();
    diff_cmd->callback([&diff_baseline, &diff_current, &diff_format] {
        const ReportDiff d = diff(load_report(diff_baseline), load_report(diff_current));
        std::cout << render_diff(d, diff_format == "json" ? ReportFormat::Json
                                                          : ReportFormat::Markdown);
    });

    SimulateArgs sim_args;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "Generate a synthetic fixture");
    sim_cmd->add_option("--seed", sim_args.seed, "PRNG seed")->required();
    sim_cmd->add_option("--out-dir", sim_args.out_dir, "Directory for the fixture files")
        ->required();
    sim_cmd->add_option("--racks", sim_args.profile.racks)->capture_default_str();
    sim_cmd->add_option("--aisles", sim_args.profile.aisles)->capture_default_str();
    sim_cmd->add_option("--servers-per-rack", sim_args.profile.servers_per_rack)
        ->capture_default_str();
    sim_cmd->add_option("--lamps", sim_args.profile.lamps)->capture_default_str();
    sim_cmd->add_option("--filters", sim_args.profile.filters)->capture_default_str();
    sim_cmd->add_option("--fans", sim_args.profile.fans)->capture_default_str();
    sim_cmd->add_option("--hvac-units", sim_args.profile.hvac_units)->capture_default_str();
    sim_cmd->add_option("--target-pue", sim_args.profile.target_pue)->capture_default_str();
    sim_cmd->add_option("--ambient-mean", sim_args.profile.ambient_mean_f)->capture_default_str();
    sim_cmd->add_option("--ambient-jitter", sim_args.profile.ambient_jitter_f)
        ->capture_default_str();
    sim_cmd->add_option("--rate", sim_args.rates,
                        "Compliance rate as ITEM_ID=FRACTION (repeatable)");
    sim_cmd->add_option("--window-start", sim_args.window_start, "RFC 3339 instant");
    sim_cmd->add_option("--window-end", sim_args.window_end, "RFC 3339 instant");
    sim_cmd->add_option("--step-seconds", sim_args.profile.step_seconds)->capture_default_str();
    sim_cmd->callback([&sim_args] { run_simulate(sim_args); });

    std::string validate_inventory;
    std::string validate_telemetry;
    CLI::App* validate_cmd = app.add_subcommand("validate", "Validate input files");
    validate_cmd->add_option("--inventory", validate_inventory, "Inventory JSON file")->required();
    validate_cmd->add_option("--telemetry", validate_telemetry, "Telemetry CSV file");
    validate_cmd->callback(
        [&validate_inventory, &validate_telemetry] { run_validate(validate_inventory, validate_telemetry); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
