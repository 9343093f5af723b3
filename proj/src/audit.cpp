#include "dcaudit/audit.hpp"

#include "dcaudit/errors.hpp"
#include "dcaudit/version.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace dcaudit {

std::string_view to_string(AuditTier tier)
{
    return tier == AuditTier::Full ? "full" : "lite";
}

std::string_view to_string(AuditMode mode)
{
    return mode == AuditMode::Full ? "full" : "lite";
}

std::optional<AuditMode> audit_mode_from_string(std::string_view text)
{
    if (text == "full") return AuditMode::Full;
    if (text == "lite") return AuditMode::Lite;
    return std::nullopt;
}

std::string_view to_string(AuditCategory category)
{
    switch (category) {
    case AuditCategory::CoolingAirAndAirManagement: return "cooling_air_and_air_management";
    case AuditCategory::EnvironmentalConditions: return "environmental_conditions";
    case AuditCategory::Global: return "global";
    case AuditCategory::ItEquipment: return "it_equipment";
    case AuditCategory::ItPowerDistributionChain: return "it_power_distribution_chain";
    case AuditCategory::Lighting: return "lighting";
    }
    return "unknown";
}

std::string_view category_display_name(AuditCategory category)
{
    switch (category) {
    case AuditCategory::CoolingAirAndAirManagement: return "Cooling Air and Air Management";
    case AuditCategory::EnvironmentalConditions: return "Environmental Conditions";
    case AuditCategory::Global: return "Global";
    case AuditCategory::ItEquipment: return "IT Equipment";
    case AuditCategory::ItPowerDistributionChain: return "IT Power Distribution Chain";
    case AuditCategory::Lighting: return "Lighting";
    }
    return "Unknown";
}

std::string_view to_string(AuditLevel level)
{
    switch (level) {
    case AuditLevel::Rack: return "rack";
    case AuditLevel::Aisle: return "aisle";
    case AuditLevel::Filter: return "filter";
    case AuditLevel::Server: return "server";
    case AuditLevel::Fan: return "fan";
    case AuditLevel::HvacSystem: return "hvac_system";
    case AuditLevel::Room: return "room";
    case AuditLevel::DataCenter: return "data_center";
    }
    return "unknown";
}

std::string_view to_string(Compliance compliance)
{
    switch (compliance) {
    case Compliance::Pass: return "pass";
    case Compliance::Fail: return "fail";
    case Compliance::PartialNumeric: return "partial_numeric";
    case Compliance::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

std::optional<Compliance> compliance_from_string(std::string_view text)
{
    if (text == "pass") return Compliance::Pass;
    if (text == "fail") return Compliance::Fail;
    if (text == "partial_numeric") return Compliance::PartialNumeric;
    if (text == "not_applicable") return Compliance::NotApplicable;
    return std::nullopt;
}

const std::vector<AuditItem>& audit_item_registry()
{
    static const std::vector<AuditItem> registry = [] {
        using C = AuditCategory;
        using T = AuditTier;
        using L = AuditLevel;
        std::vector<AuditItem> items;
        auto add = [&items](std::string_view id, std::string_view title, C category, T tier,
                            L level, std::optional<std::string> alt = std::nullopt) {
            items.push_back({std::string(id), std::string(title), std::move(alt), category, tier,
                             level});
        };
        add(item_ids::rti, "Return Temperature Index", C::CoolingAirAndAirManagement, T::Full,
            L::Room);
        add(item_ids::alt_aisles, "Alternating Hot and Cold Rack Aisles",
            C::CoolingAirAndAirManagement, T::Full, L::Aisle);
        add(item_ids::barriers, "Physical Separation of Hot and Cold Air of Rack Aisles",
            C::CoolingAirAndAirManagement, T::Lite, L::Aisle);
        add(item_ids::cabling, "Structured Cabling for a Rack", C::CoolingAirAndAirManagement,
            T::Lite, L::Rack);
        add(item_ids::merv, "Air Filter MERV Rating Compliance", C::CoolingAirAndAirManagement,
            T::Lite, L::Filter);
        add(item_ids::ambient_temp, "Data Center Ambient Temperature", C::EnvironmentalConditions,
            T::Lite, L::DataCenter);
        add(item_ids::rci, "Rack Cooling Index", C::EnvironmentalConditions, T::Full, L::Rack);
        add(item_ids::pue, "Power Usage Effectiveness", C::Global, T::Lite, L::DataCenter);
        add(item_ids::dcie, "Data Center Infrastructure Efficiency", C::Global, T::Lite,
            L::DataCenter, "Data Center Infrastructure Effectiveness");
        add(item_ids::ere, "Energy Reuse Effectiveness", C::Global, T::Lite, L::DataCenter);
        add(item_ids::hvacse, "HVAC System Effectiveness", C::Global, T::Lite, L::DataCenter);
        add(item_ids::ae, "Airflow Efficiency", C::Global, T::Lite, L::Fan);
        add(item_ids::cse, "Cooling System Efficiency", C::Global, T::Lite, L::HvacSystem);
        add(item_ids::unused_servers, "Identify Unused Operational Servers", C::ItEquipment,
            T::Lite, L::DataCenter);
        add(item_ids::cpu_util, "Monitor Server CPU Utilization", C::ItEquipment, T::Full,
            L::Server);
        add(item_ids::equip_eff, "Equipment Efficiency", C::ItEquipment, T::Lite, L::Server);
        add(item_ids::power_sources, "Identify Power Sources", C::ItPowerDistributionChain,
            T::Lite, L::DataCenter, "Trace Data Center Power Generation Sources");
        add(item_ids::led, "LED Bulbs", C::Lighting, T::Lite, L::DataCenter);
        add(item_ids::dimming, "Lighting Control and Dimming", C::Lighting, T::Lite,
            L::DataCenter);
        add(item_ids::occupancy, "Occupancy Sensors to Control Lights", C::Lighting, T::Lite,
            L::DataCenter);
        return items;
    }();
    return registry;
}

const AuditItem* find_audit_item(std::string_view item_id)
{
    for (const AuditItem& item : audit_item_registry()) {
        if (item.item_id == item_id) {
            return &item;
        }
    }
    return nullptr;
}

namespace {

// -- recommended actions and goals, by item ----------------------------------

std::string benchmark_action(std::string_view metric_name)
{
    std::string name(metric_name);
    return "Once an organization has a benchmark understanding of its " + name
           + ", it can use the non-metric best practices to take actions to improve " + name
           + " and track it over time. This benchmark can also be used in cooperation with any "
             "existing sustainability strategy from the organization, to drive goals for future "
           + name + " values.";
}

std::string benchmark_goal(std::string_view metric_name)
{
    return "Benchmark " + std::string(metric_name)
           + " per data center; overall current state of data center energy efficiency.";
}

std::string fmt_num(double v, int decimals = 2)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string fmt_pct(double fraction)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g%%", fraction * 100.0);
    return buf;
}

// -- evaluation context -------------------------------------------------------

struct Ctx {
    const Inventory& inv;
    const TelemetrySet& tel;
    AuditWindow win;
    const ThresholdTable& table;
    const AuditConfig& cfg;
};

AuditItemResult start_result(std::string_view item_id, std::string goal)
{
    AuditItemResult r;
    r.item_id = std::string(item_id);
    r.goal_statement = std::move(goal);
    return r;
}

AuditItemResult not_applicable(std::string_view item_id, std::string goal, std::string warning)
{
    AuditItemResult r = start_result(item_id, std::move(goal));
    r.compliance = Compliance::NotApplicable;
    r.warnings.push_back(std::move(warning));
    return r;
}

/// Windowed series for a sensor, or nullopt (absent / empty in window /
/// wrong kind, each with a warning pushed to `warnings`).
std::optional<TelemetrySeries> windowed(const Ctx& ctx, std::string_view sensor_id,
                                        SensorKind want_power_or, std::vector<std::string>* warnings,
                                        bool allow_watt_kilowatt_pair = false)
{
    const TelemetrySeries* series = ctx.tel.find(sensor_id);
    if (series == nullptr) {
        if (warnings != nullptr) {
            warnings->push_back("sensor '" + std::string(sensor_id) + "' has no telemetry");
        }
        return std::nullopt;
    }
    const bool kind_ok = series->kind == want_power_or
                         || (allow_watt_kilowatt_pair
                             && (series->kind == SensorKind::PowerW
                                 || series->kind == SensorKind::PowerKw));
    if (!kind_ok) {
        if (warnings != nullptr) {
            warnings->push_back("sensor '" + std::string(sensor_id) + "' has kind "
                                + std::string(to_string(series->kind)) + ", expected "
                                + std::string(to_string(want_power_or)));
        }
        return std::nullopt;
    }
    TelemetrySeries w = window(*series, ctx.win.start, ctx.win.end);
    if (w.points.empty()) {
        if (warnings != nullptr) {
            warnings->push_back("sensor '" + std::string(sensor_id)
                                + "' has no readings inside the audit window");
        }
        return std::nullopt;
    }
    return w;
}

double series_sum(const TelemetrySeries& s)
{
    double sum = 0.0;
    for (const TelemetryPoint& p : s.points) {
        sum += p.value;
    }
    return sum;
}

double series_mean(const TelemetrySeries& s)
{
    return series_sum(s) / static_cast<double>(s.points.size());
}

/// Window-summed power readings normalized to kW.
std::optional<double> power_sum_kw(const Ctx& ctx, std::string_view sensor_id,
                                   std::vector<std::string>* warnings)
{
    const auto s = windowed(ctx, sensor_id, SensorKind::PowerKw, warnings, true);
    if (!s) {
        return std::nullopt;
    }
    const double sum = series_sum(*s);
    return s->kind == SensorKind::PowerW ? sum / 1000.0 : sum;
}

std::string window_digest(const Ctx& ctx)
{
    return "window=" + format_rfc3339(ctx.win.start) + ".." + format_rfc3339(ctx.win.end);
}

// -- simple fraction items ----------------------------------------------------

struct FractionSpec {
    std::string_view item_id;
    std::string goal;
    std::string action;
    std::size_t compliant = 0;
    std::size_t total = 0;
    std::vector<std::string> warnings;
    std::string empty_note;  // warning when there is nothing to rate
};

AuditItemResult eval_fraction(FractionSpec spec)
{
    if (spec.total == 0) {
        return not_applicable(spec.item_id, std::move(spec.goal), std::move(spec.empty_note));
    }
    AuditItemResult r = start_result(spec.item_id, std::move(spec.goal));
    r.metrics.push_back(compliance_ratio(spec.compliant, spec.total));
    r.warnings = std::move(spec.warnings);
    if (spec.compliant == spec.total) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back(std::move(spec.action));
    }
    return r;
}

std::vector<const Aisle*> all_aisles(const Inventory& inv)
{
    std::vector<const Aisle*> aisles;
    for (const Room& room : inv.rooms) {
        for (const Aisle& aisle : room.aisles) {
            aisles.push_back(&aisle);
        }
    }
    return aisles;
}

std::vector<const Rack*> all_racks(const Inventory& inv)
{
    std::vector<const Rack*> racks;
    for (const Room& room : inv.rooms) {
        for (const Aisle& aisle : room.aisles) {
            for (const Rack& rack : aisle.racks) {
                racks.push_back(&rack);
            }
        }
    }
    return racks;
}

std::vector<const Server*> all_servers(const Inventory& inv)
{
    std::vector<const Server*> servers;
    for (const Rack* rack : all_racks(inv)) {
        for (const Server& server : rack->servers) {
            servers.push_back(&server);
        }
    }
    return servers;
}

AuditItemResult eval_barriers(const Ctx& ctx)
{
    FractionSpec spec;
    spec.item_id = item_ids::barriers;
    spec.goal = "Identify which aisles do not follow the physical barrier scheme.";
    spec.action = "With non-compliant aisles, install a barrier (e.g., strip curtain, rigid "
                  "enclosures, etc.) to ensure 100% compliance.";
    spec.empty_note = "inventory lists no aisles";
    for (const Aisle* aisle : all_aisles(ctx.inv)) {
        ++spec.total;
        if (aisle->barrier_installed) {
            ++spec.compliant;
        }
    }
    AuditItemResult r = eval_fraction(std::move(spec));
    if (r.compliance == Compliance::Fail) {
        const SavingsRange s = barrier_retrofit_savings();
        r.actions.push_back("Estimated effect of full barrier separation: " + fmt_pct(s.lo) + " to "
                            + fmt_pct(s.hi) + " lower fan energy requirements.");
    }
    return r;
}

AuditItemResult eval_cabling(const Ctx& ctx)
{
    FractionSpec spec;
    spec.item_id = item_ids::cabling;
    spec.goal = "Identify which racks have unstructured cabling.";
    spec.action = "With non-compliant racks, re-wire to ensure structured cabling.";
    spec.empty_note = "inventory lists no racks";
    for (const Rack* rack : all_racks(ctx.inv)) {
        ++spec.total;
        if (rack->cabling == CablingState::Structured) {
            ++spec.compliant;
        } else if (rack->cabling == CablingState::Unknown) {
            spec.warnings.push_back("rack '" + rack->id
                                    + "' has unknown cabling state; counted non-compliant");
        }
    }
    return eval_fraction(std::move(spec));
}

AuditItemResult eval_merv(const Ctx& ctx)
{
    FractionSpec spec;
    spec.item_id = item_ids::merv;
    spec.goal = "Identify which air filters are not compliant.";
    spec.action = "With non-compliant air filters, replace with the appropriate MERV-rated air "
                  "filter.";
    spec.empty_note = "inventory lists no air filters";
    for (const Room& room : ctx.inv.rooms) {
        for (const AirFilter& filter : room.filters) {
            ++spec.total;
            if (check_filter(filter)) {
                ++spec.compliant;
            } else if (filter.purpose == FilterPurpose::ExternalIntake && filter.merv_rating > 13) {
                // Over-filtering external air costs pressure drop, not air
                // quality: flagged but counted compliant.
                ++spec.compliant;
                spec.warnings.push_back("filter '" + filter.id + "': MERV "
                                        + std::to_string(filter.merv_rating)
                                        + " exceeds 13 on external intake (pressure-drop cost)");
            }
        }
    }
    return eval_fraction(std::move(spec));
}

AuditItemResult eval_led(const Ctx& ctx)
{
    FractionSpec spec;
    spec.item_id = item_ids::led;
    spec.goal = "Identify which lamps do not contain LED bulbs. The goal is 100%.";
    spec.action = "Replace all non-LED bulbs with LED. The goal is 100%.";
    spec.empty_note = "inventory lists no lamps";
    double incandescent_w = 0.0;
    std::size_t incandescent_count = 0;
    for (const Room& room : ctx.inv.rooms) {
        for (const Lamp& lamp : room.lamps) {
            ++spec.total;
            if (lamp.bulb == BulbType::Led) {
                ++spec.compliant;
            } else if (lamp.bulb == BulbType::Incandescent) {
                ++incandescent_count;
                incandescent_w += lamp.rated_power_w;
            }
        }
    }
    AuditItemResult r = eval_fraction(std::move(spec));
    if (r.compliance == Compliance::Fail && incandescent_count > 0) {
        r.actions.push_back("Swapping the " + std::to_string(incandescent_count)
                            + " incandescent lamp(s) for LED saves about "
                            + fmt_num(led_swap_savings_w(incandescent_w), 0) + " W (75% of their "
                            + fmt_num(incandescent_w, 0) + " W draw).");
    }
    return r;
}

AuditItemResult eval_dimming(const Ctx& ctx)
{
    FractionSpec spec;
    spec.item_id = item_ids::dimming;
    spec.goal = "Identify which lamps do not offer dimming. The goal is 100%.";
    spec.action = "Install dimming controls on all non-dimming lamps and lights. The goal is "
                  "100%.";
    spec.empty_note = "inventory lists no lamps";
    for (const Room& room : ctx.inv.rooms) {
        for (const Lamp& lamp : room.lamps) {
            ++spec.total;
            if (lamp.dimmable) {
                ++spec.compliant;
            }
        }
    }
    return eval_fraction(std::move(spec));
}

AuditItemResult eval_occupancy(const Ctx& ctx)
{
    FractionSpec spec;
    spec.item_id = item_ids::occupancy;
    spec.goal = "Identify which lamps do not offer control via occupancy sensors. The goal is "
                "100%.";
    spec.action = "Install occupancy sensors on all non-equipped lamps and lights. The goal is "
                  "100%.";
    spec.empty_note = "inventory lists no lamps";
    for (const Room& room : ctx.inv.rooms) {
        for (const Lamp& lamp : room.lamps) {
            ++spec.total;
            if (lamp.occupancy_sensor) {
                ++spec.compliant;
            }
        }
    }
    return eval_fraction(std::move(spec));
}

AuditItemResult eval_unused_servers(const Ctx& ctx)
{
    const std::string goal = "Identify which operational servers are not in use and consider "
                             "them candidates for retirement.";
    const auto servers = all_servers(ctx.inv);
    if (servers.empty()) {
        return not_applicable(item_ids::unused_servers, goal, "inventory lists no servers");
    }
    std::size_t unused = 0;
    for (const Server* server : servers) {
        if (!server->in_use) {
            ++unused;
        }
    }
    AuditItemResult r = start_result(item_ids::unused_servers, goal);
    r.metrics.push_back({MetricId::UnusedFraction,
                         static_cast<double>(unused) / static_cast<double>(servers.size()), "",
                         std::to_string(unused) + "/" + std::to_string(servers.size())
                             + " servers unused"});
    if (unused == 0) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back("Determine which unused operational servers to retire, to ensure all "
                            "servers that are drawing energy are in use.");
    }
    return r;
}

AuditItemResult eval_power_sources(const Ctx& ctx)
{
    const std::string goal = "Identify how electrical power is generated for the data center. "
                             "The goal is 100% renewable.";
    if (ctx.inv.power_sources.empty()) {
        return not_applicable(item_ids::power_sources, goal, "inventory lists no power sources");
    }
    AuditItemResult r = start_result(item_ids::power_sources, goal);
    try {
        r.metrics.push_back(renewable_fraction(ctx.inv.power_sources));
    } catch (const DivisionByZero&) {
        return not_applicable(item_ids::power_sources, goal,
                              "all power sources report zero energy supplied");
    }
    if (r.metrics.front().value == 1.0) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back("Work with the organization's facilities group to create a strategy "
                            "to phase out non-renewable sources of power in favor of renewable "
                            "sources. The goal is 100%.");
    }
    return r;
}

// -- alternation --------------------------------------------------------------

} // namespace

AuditItemResult eval_alternating_aisles(const std::vector<Aisle>& aisles)
{
    const std::string goal = "Identify which rows do not follow the alternating hot and cold "
                             "aisle scheme.";
    if (aisles.empty()) {
        return not_applicable(item_ids::alt_aisles, goal, "inventory lists no aisles");
    }

    std::unordered_map<std::string_view, ThermalRole> role_by_id;
    for (const Aisle& aisle : aisles) {
        role_by_id.emplace(aisle.id, aisle.thermal_role);
    }

    AuditItemResult r = start_result(item_ids::alt_aisles, goal);
    std::size_t compliant = 0;
    for (const Aisle& aisle : aisles) {
        if (aisle.thermal_role == ThermalRole::Unassigned) {
            r.warnings.push_back("aisle '" + aisle.id + "' has no thermal role assigned");
            continue;
        }
        const ThermalRole opposite =
            aisle.thermal_role == ThermalRole::Hot ? ThermalRole::Cold : ThermalRole::Hot;
        bool ok = true;
        for (const std::string& neighbor_id : aisle.neighbor_ids) {
            const auto it = role_by_id.find(neighbor_id);
            if (it == role_by_id.end() || it->second != opposite) {
                ok = false;
                break;
            }
        }
        if (ok && aisle.neighbor_ids.empty()) {
            r.warnings.push_back("aisle '" + aisle.id
                                 + "' has no recorded neighbors; compliant vacuously");
        }
        if (ok) {
            ++compliant;
        }
    }
    r.metrics.push_back(compliance_ratio(compliant, aisles.size()));
    if (compliant == aisles.size()) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back("Re-organize server racks and HVAC system to ensure 100% compliance.");
    }
    return r;
}

namespace {

AuditItemResult eval_alt_aisles_item(const Ctx& ctx)
{
    std::vector<Aisle> aisles;
    for (const Room& room : ctx.inv.rooms) {
        aisles.insert(aisles.end(), room.aisles.begin(), room.aisles.end());
    }
    return eval_alternating_aisles(aisles);
}

// -- thermal items -------------------------------------------------------------

AuditItemResult eval_ambient(const Ctx& ctx)
{
    const std::string goal = "Determine if data center follows ASHRAE guidelines for data center "
                             "temperature ranges.";
    AuditItemResult r = start_result(item_ids::ambient_temp, goal);
    const auto series = windowed(ctx, sensor_ids::ambient, SensorKind::TemperatureF, &r.warnings);
    if (!series) {
        r.compliance = Compliance::NotApplicable;
        return r;
    }
    const ThermalEnvelope env = ctx.table.envelope_for(ctx.cfg.ashrae_class);
    MetricValue recommended = ambient_compliance(*series, env, TemperatureBand::Recommended);
    MetricValue allowable = ambient_compliance(*series, env, TemperatureBand::Allowable);
    r.metrics.push_back(std::move(recommended));
    r.metrics.push_back(std::move(allowable));

    if (r.metrics.front().value == 1.0) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back("Raise the data center's ambient temperature to not only be within "
                            "the acceptable ASHRAE suggested temperature range, but strive to be "
                            "near the high temperature limit.");
    }
    const double headroom = env.max_rec_f - series_mean(*series);
    if (headroom >= 1.0) {
        const SavingsRange s = setpoint_raise_savings(headroom);
        r.actions.push_back("Mean ambient is " + fmt_num(headroom, 1)
                            + " °F below the recommended high limit; raising the setpoint that "
                              "far saves an estimated "
                            + fmt_num(s.lo * 100.0, 1) + "% to " + fmt_num(s.hi * 100.0, 1)
                            + "% in energy costs.");
    }
    return r;
}

struct RackTemps {
    const Rack* rack;
    std::vector<double> intake;
    std::vector<double> exhaust;
};

std::vector<RackTemps> collect_rack_temps(const Ctx& ctx, const Room& room,
                                          std::vector<std::string>& warnings)
{
    std::vector<RackTemps> out;
    for (const Aisle& aisle : room.aisles) {
        for (const Rack& rack : aisle.racks) {
            RackTemps temps{&rack, {}, {}};
            if (rack.intake_sensor_ids.empty()) {
                warnings.push_back("rack '" + rack.id
                                   + "' has no intake sensors; excluded from RCI/RTI");
                continue;
            }
            for (const std::string& sensor : rack.intake_sensor_ids) {
                if (const auto s = windowed(ctx, sensor, SensorKind::TemperatureF, &warnings)) {
                    for (const TelemetryPoint& p : s->points) {
                        temps.intake.push_back(p.value);
                    }
                }
            }
            for (const std::string& sensor : rack.exhaust_sensor_ids) {
                if (const auto s = windowed(ctx, sensor, SensorKind::TemperatureF, &warnings)) {
                    for (const TelemetryPoint& p : s->points) {
                        temps.exhaust.push_back(p.value);
                    }
                }
            }
            if (temps.intake.empty()) {
                warnings.push_back("rack '" + rack.id
                                   + "' has no intake readings in the window; excluded");
                continue;
            }
            out.push_back(std::move(temps));
        }
    }
    return out;
}

double mean_of(const std::vector<double>& values)
{
    return std::accumulate(values.begin(), values.end(), 0.0)
           / static_cast<double>(values.size());
}

AuditItemResult eval_rci(const Ctx& ctx)
{
    const std::string goal = "Identify which rooms or data centers do not have sufficient "
                             "temperature management (i.e., RCI != 100%).";
    AuditItemResult r = start_result(item_ids::rci, goal);
    const ThermalEnvelope env = ctx.table.envelope_for(ctx.cfg.ashrae_class);

    std::size_t racks_rated = 0;
    std::size_t racks_ok = 0;
    std::vector<MetricValue> per_rack;
    for (const Room& room : ctx.inv.rooms) {
        for (const RackTemps& temps : collect_rack_temps(ctx, room, r.warnings)) {
            const RciResult rci_result = rci(temps.intake, env);
            ++racks_rated;
            if (rci_result.hi.value == 100.0 && rci_result.lo.value == 100.0) {
                ++racks_ok;
            }
            MetricValue hi = rci_result.hi;
            MetricValue lo = rci_result.lo;
            hi.inputs_digest = "rack=" + temps.rack->id + " " + hi.inputs_digest;
            lo.inputs_digest = "rack=" + temps.rack->id + " " + lo.inputs_digest;
            per_rack.push_back(std::move(hi));
            per_rack.push_back(std::move(lo));
        }
    }
    if (racks_rated == 0) {
        r.compliance = Compliance::NotApplicable;
        if (r.warnings.empty()) {
            r.warnings.push_back("no rack has intake telemetry; RCI not applicable");
        }
        return r;
    }
    r.metrics.push_back(compliance_ratio(racks_ok, racks_rated));
    r.metrics.insert(r.metrics.end(), per_rack.begin(), per_rack.end());
    if (racks_ok == racks_rated) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back("Adjust rack temperature management to ensure optimal RCI_HI and "
                            "RCI_LO (100%).");
    }
    return r;
}

AuditItemResult eval_rti(const Ctx& ctx)
{
    const std::string goal = "Identify which rooms or data centers do not have sufficient "
                             "airflow management (i.e., RTI != 100%).";
    AuditItemResult r = start_result(item_ids::rti, goal);

    struct RoomRti {
        std::string room_id;
        RtiResult result;
    };
    std::vector<RoomRti> rooms;
    for (const Room& room : ctx.inv.rooms) {
        const auto ret = windowed(ctx, sensor_ids::room_return_temp(room.id),
                                  SensorKind::TemperatureF, &r.warnings);
        const auto sup = windowed(ctx, sensor_ids::room_supply_temp(room.id),
                                  SensorKind::TemperatureF, &r.warnings);
        if (!ret || !sup) {
            r.warnings.push_back("room '" + room.id
                                 + "' lacks return/supply temperatures; excluded from RTI");
            continue;
        }
        const auto racks = collect_rack_temps(ctx, room, r.warnings);
        std::vector<double> deltas;
        for (const RackTemps& temps : racks) {
            if (temps.exhaust.empty()) {
                r.warnings.push_back("rack '" + temps.rack->id
                                     + "' has no exhaust readings; skipped for equipment delta-T");
                continue;
            }
            deltas.push_back(mean_of(temps.exhaust) - mean_of(temps.intake));
        }
        if (deltas.empty()) {
            r.warnings.push_back("room '" + room.id
                                 + "' has no rack with intake and exhaust readings; excluded "
                                   "from RTI");
            continue;
        }
        // Equipment delta-T: unweighted mean across racks (per-rack airflow
        // is not part of the data model).
        const double equip_dt = mean_of(deltas);
        if (equip_dt <= 0.0) {
            r.warnings.push_back("room '" + room.id + "' equipment delta-T is non-positive ("
                                 + fmt_num(equip_dt) + " °F); excluded from RTI");
            continue;
        }
        try {
            RtiResult room_rti = rti(series_mean(*ret), series_mean(*sup), equip_dt);
            room_rti.metric.inputs_digest = "room=" + room.id + " " + room_rti.metric.inputs_digest;
            rooms.push_back({room.id, std::move(room_rti)});
        } catch (const Error& e) {
            r.warnings.push_back("room '" + room.id + "': RTI not computable: " + e.what());
        }
    }

    if (rooms.empty()) {
        r.compliance = Compliance::NotApplicable;
        if (r.warnings.empty()) {
            r.warnings.push_back("no room has the telemetry RTI needs");
        }
        return r;
    }

    double sum = 0.0;
    for (const RoomRti& room : rooms) {
        sum += room.result.metric.value;
    }
    const double dc_value = sum / static_cast<double>(rooms.size());
    r.metrics.push_back({MetricId::Rti, dc_value, "%",
                         "unweighted mean over " + std::to_string(rooms.size()) + " room(s)"});
    bool all_ok = true;
    for (const RoomRti& room : rooms) {
        const double v = room.result.metric.value;
        if (std::abs(v - 100.0) > ctx.cfg.rti_tolerance_pct) {
            all_ok = false;
            if (room.result.balance == AirBalance::Bypass) {
                r.warnings.push_back("room '" + room.room_id + "': RTI " + fmt_num(v, 1)
                                     + "% < 100% indicates net by-pass air");
            } else if (room.result.balance == AirBalance::Recirculation) {
                r.warnings.push_back("room '" + room.room_id + "': RTI " + fmt_num(v, 1)
                                     + "% > 100% indicates net recirculation air");
            }
        }
        r.metrics.push_back(room.result.metric);
    }
    if (all_ok) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back("Adjust room air management to ensure optimal RTI (100%).");
    }
    return r;
}

// -- global items ---------------------------------------------------------------

struct PowerSums {
    std::optional<double> facility;
    std::optional<double> it;
};

PowerSums window_power_sums(const Ctx& ctx, std::vector<std::string>* warnings)
{
    return {power_sum_kw(ctx, sensor_ids::facility_power, warnings),
            power_sum_kw(ctx, sensor_ids::it_power, warnings)};
}

AuditItemResult rate_and_judge(const Ctx& ctx, AuditItemResult r, MetricValue metric,
                               std::string_view metric_name)
{
    const BenchmarkRating rating = ctx.table.rate(metric);
    r.metrics.push_back(std::move(metric));
    r.rating = rating;
    r.compliance = rating.rating == Rating::BelowStandard ? Compliance::Fail : Compliance::Pass;
    r.actions.push_back(benchmark_action(metric_name));
    return r;
}

AuditItemResult eval_pue(const Ctx& ctx)
{
    AuditItemResult r = start_result(item_ids::pue, benchmark_goal("PUE"));
    const PowerSums sums = window_power_sums(ctx, &r.warnings);
    if (!sums.facility || !sums.it || *sums.it == 0.0) {
        if (sums.it && *sums.it == 0.0) {
            r.warnings.push_back("IT power sums to zero over the window");
        }
        r.compliance = Compliance::NotApplicable;
        return r;
    }
    if (*sums.facility < *sums.it) {
        r.warnings.push_back("facility power is below IT power over the window; check metering");
    }
    MetricValue metric = pue(*sums.facility, *sums.it);
    metric.inputs_digest = "window-summed kWh; " + metric.inputs_digest + "; " + window_digest(ctx);
    return rate_and_judge(ctx, std::move(r), std::move(metric), "PUE");
}

AuditItemResult eval_dcie(const Ctx& ctx)
{
    AuditItemResult r = start_result(item_ids::dcie, benchmark_goal("DCIE"));
    const PowerSums sums = window_power_sums(ctx, &r.warnings);
    if (!sums.facility || !sums.it || *sums.it == 0.0 || *sums.facility == 0.0) {
        if (sums.facility && sums.it && (*sums.it == 0.0 || *sums.facility == 0.0)) {
            r.warnings.push_back("facility or IT power sums to zero over the window");
        }
        r.compliance = Compliance::NotApplicable;
        return r;
    }
    MetricValue metric = dcie(pue(*sums.facility, *sums.it).value);
    metric.inputs_digest = "window-summed kWh; " + metric.inputs_digest + "; " + window_digest(ctx);
    return rate_and_judge(ctx, std::move(r), std::move(metric), "DCIE");
}

AuditItemResult eval_ere(const Ctx& ctx)
{
    AuditItemResult r = start_result(item_ids::ere,
                                     "Benchmark ERE per data center and track it over time; "
                                     "overall current state of data center energy efficiency.");
    const auto it_sum = power_sum_kw(ctx, sensor_ids::it_power, &r.warnings);
    if (!it_sum || *it_sum == 0.0) {
        if (it_sum && *it_sum == 0.0) {
            r.warnings.push_back("IT power sums to zero over the window");
        }
        r.compliance = Compliance::NotApplicable;
        return r;
    }
    auto optional_term = [&](std::string_view id) {
        const auto v = power_sum_kw(ctx, id, nullptr);
        if (!v) {
            r.warnings.push_back("series '" + std::string(id) + "' absent; treated as 0 kWh");
        }
        return v.value_or(0.0);
    };
    const double cooling = optional_term(sensor_ids::cooling_power);
    const double distribution = optional_term(sensor_ids::distribution_power);
    const double lighting = optional_term(sensor_ids::lighting_power);
    const double reuse = optional_term(sensor_ids::reuse_power);
    MetricValue metric;
    try {
        metric = ere(cooling, distribution, lighting, *it_sum, reuse);
    } catch (const NegativeResult& e) {
        r.compliance = Compliance::NotApplicable;
        r.warnings.push_back(std::string("inconsistent energy inputs: ") + e.what());
        return r;
    }
    metric.inputs_digest = "window-summed kWh; " + metric.inputs_digest + "; " + window_digest(ctx);
    r.rating = ctx.table.rate(metric);  // no published score: NotRated
    r.metrics.push_back(std::move(metric));
    r.compliance = Compliance::PartialNumeric;
    r.actions.push_back(benchmark_action("ERE"));
    return r;
}

AuditItemResult eval_hvacse(const Ctx& ctx)
{
    AuditItemResult r = start_result(item_ids::hvacse, benchmark_goal("HVACSE"));
    const auto it_annual = windowed(ctx, sensor_ids::it_energy_annual, SensorKind::EnergyKwhAnnual,
                                    nullptr);
    const auto hvac_annual = windowed(ctx, sensor_ids::hvac_energy_annual,
                                      SensorKind::EnergyKwhAnnual, nullptr);
    double it_energy = 0.0;
    double hvac_energy = 0.0;
    if (it_annual && hvac_annual) {
        it_energy = it_annual->points.back().value;    // latest annual figure in window
        hvac_energy = hvac_annual->points.back().value;
    } else {
        constexpr std::int64_t kMinSeconds = 360LL * 86400;  // close enough to a year
        if (ctx.win.end.secs - ctx.win.start.secs < kMinSeconds) {
            r.compliance = Compliance::NotApplicable;
            r.warnings.push_back("HVACSE needs energy_kwh_annual sensors ('it_energy_annual', "
                                 "'hvac_energy_annual') or an audit window of at least 360 days");
            return r;
        }
        const auto it_sum = power_sum_kw(ctx, sensor_ids::it_power, &r.warnings);
        const auto hvac_sum = power_sum_kw(ctx, sensor_ids::hvac_power, &r.warnings);
        if (!it_sum || !hvac_sum || *hvac_sum == 0.0) {
            if (hvac_sum && *hvac_sum == 0.0) {
                r.warnings.push_back("HVAC power sums to zero over the window");
            }
            r.compliance = Compliance::NotApplicable;
            return r;
        }
        it_energy = *it_sum;
        hvac_energy = *hvac_sum;
    }
    if (hvac_energy == 0.0) {
        r.compliance = Compliance::NotApplicable;
        r.warnings.push_back("annual HVAC energy is zero; HVACSE undefined");
        return r;
    }
    MetricValue metric = hvacse(it_energy, hvac_energy);
    metric.inputs_digest += "; " + window_digest(ctx);
    return rate_and_judge(ctx, std::move(r), std::move(metric), "HVACSE");
}

AuditItemResult eval_ae(const Ctx& ctx)
{
    AuditItemResult r = start_result(item_ids::ae, benchmark_goal("AE"));
    double power_w = 0.0;
    double airflow_cfm = 0.0;
    std::size_t fans_used = 0;
    for (const Room& room : ctx.inv.rooms) {
        for (const Fan& fan : room.fans) {
            const auto power = windowed(ctx, fan.power_sensor_id, SensorKind::PowerW, &r.warnings,
                                        true);
            const auto airflow = windowed(ctx, fan.airflow_sensor_id, SensorKind::AirflowCfm,
                                          &r.warnings);
            if (!power || !airflow) {
                r.warnings.push_back("fan '" + fan.id + "' lacks usable telemetry; skipped");
                continue;
            }
            const double mean_power = series_mean(*power);
            power_w += power->kind == SensorKind::PowerKw ? mean_power * 1000.0 : mean_power;
            airflow_cfm += series_mean(*airflow);
            ++fans_used;
        }
    }
    if (fans_used == 0 || airflow_cfm == 0.0) {
        r.compliance = Compliance::NotApplicable;
        if (fans_used == 0) {
            r.warnings.push_back("no fan has usable power and airflow telemetry");
        } else {
            r.warnings.push_back("total fan airflow is zero; AE undefined");
        }
        return r;
    }
    MetricValue metric = airflow_efficiency(power_w, airflow_cfm);
    metric.inputs_digest = "ratio of sums over " + std::to_string(fans_used) + " fan(s); "
                           + metric.inputs_digest + "; " + window_digest(ctx);
    return rate_and_judge(ctx, std::move(r), std::move(metric), "AE");
}

AuditItemResult eval_cse(const Ctx& ctx)
{
    AuditItemResult r = start_result(item_ids::cse, benchmark_goal("CSE"));
    double power_kw = 0.0;
    double load_tons = 0.0;
    std::size_t units_used = 0;
    for (const Room& room : ctx.inv.rooms) {
        for (const HvacUnit& unit : room.hvac_units) {
            const auto power = windowed(ctx, unit.power_sensor_id, SensorKind::PowerKw, &r.warnings,
                                        true);
            const auto load = windowed(ctx, unit.load_sensor_id, SensorKind::CoolingLoadTons,
                                       &r.warnings);
            if (!power || !load) {
                r.warnings.push_back("HVAC unit '" + unit.id + "' lacks usable telemetry; skipped");
                continue;
            }
            const double mean_power = series_mean(*power);
            power_kw += power->kind == SensorKind::PowerW ? mean_power / 1000.0 : mean_power;
            load_tons += series_mean(*load);
            ++units_used;
        }
    }
    if (units_used == 0 || load_tons == 0.0) {
        r.compliance = Compliance::NotApplicable;
        if (units_used == 0) {
            r.warnings.push_back("no HVAC unit has usable power and load telemetry");
        } else {
            r.warnings.push_back("total cooling load is zero; CSE undefined");
        }
        return r;
    }
    MetricValue metric = cooling_system_efficiency(power_kw, load_tons);
    metric.inputs_digest = "ratio of sums over " + std::to_string(units_used) + " unit(s); "
                           + metric.inputs_digest + "; " + window_digest(ctx);
    return rate_and_judge(ctx, std::move(r), std::move(metric), "CSE");
}

// -- IT equipment items ----------------------------------------------------------

AuditItemResult eval_cpu_util(const Ctx& ctx)
{
    const std::string goal = "Identify which operational servers are under-utilized or "
                             "over-utilized.";
    AuditItemResult r = start_result(item_ids::cpu_util, goal);
    std::size_t rated = 0;
    std::size_t correct = 0;
    std::vector<MetricValue> per_server;
    for (const Server* server : all_servers(ctx.inv)) {
        if (!server->cpu_utilization_sensor_id) {
            r.warnings.push_back("server '" + server->id + "' has no utilization sensor bound");
            continue;
        }
        const auto samples = windowed(ctx, *server->cpu_utilization_sensor_id,
                                      SensorKind::CpuUtilizationPct, &r.warnings);
        if (!samples) {
            continue;
        }
        MetricValue m = classify_utilization(*samples, ctx.cfg.utilization_aggregation);
        m.inputs_digest = "server=" + server->id + " " + m.inputs_digest;
        ++rated;
        if (utilization_class(m.value) == UtilizationClass::Correct) {
            ++correct;
        }
        per_server.push_back(std::move(m));
    }
    if (rated == 0) {
        r.compliance = Compliance::NotApplicable;
        if (r.warnings.empty()) {
            r.warnings.push_back("no server has utilization telemetry");
        }
        return r;
    }
    r.metrics.push_back(compliance_ratio(correct, rated));
    r.metrics.insert(r.metrics.end(), per_server.begin(), per_server.end());
    if (correct == rated) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back("Optimize server performance to avoid under-utilization (poor energy "
                            "management) and over-utilization (wear and tear).");
        r.actions.push_back("Consolidate under-utilized servers.");
    }
    return r;
}

AuditItemResult eval_equip_eff(const Ctx& ctx)
{
    const std::string goal = "Identify which equipment have a low value of GFLOP/W.";
    AuditItemResult r = start_result(item_ids::equip_eff, goal);
    const double threshold = ctx.cfg.equip_eff_threshold_gflop_per_w;
    std::size_t rated = 0;
    std::size_t efficient = 0;
    std::vector<MetricValue> per_server;
    for (const Server* server : all_servers(ctx.inv)) {
        if (server->rated_gflops <= 0.0) {
            r.warnings.push_back("server '" + server->id + "' has no GFLOP rating; skipped");
            continue;
        }
        MetricValue m = gflop_per_watt(server->rated_gflops, server->measured_power_w);
        m.inputs_digest = "server=" + server->id + " " + m.inputs_digest;
        ++rated;
        if (m.value >= threshold) {
            ++efficient;
        }
        per_server.push_back(std::move(m));
    }
    if (rated == 0) {
        r.compliance = Compliance::NotApplicable;
        if (r.warnings.empty()) {
            r.warnings.push_back("no server carries a GFLOP rating");
        }
        return r;
    }
    MetricValue headline = compliance_ratio(efficient, rated);
    headline.inputs_digest += " servers at or above " + fmt_num(threshold, 3) + " GFLOP/W";
    r.metrics.push_back(std::move(headline));
    r.metrics.insert(r.metrics.end(), per_server.begin(), per_server.end());
    if (efficient == rated) {
        r.compliance = Compliance::Pass;
    } else {
        r.compliance = Compliance::Fail;
        r.actions.push_back("Procure energy efficient servers to replace inefficient equipment.");
    }
    return r;
}

// -- sensor resolution ------------------------------------------------------------

void collect_missing_sensors(const Inventory& inv, const TelemetrySet& tel,
                             std::vector<std::string>& warnings)
{
    auto check = [&](const std::string& sensor, const std::string& owner) {
        if (!tel.contains(sensor)) {
            warnings.push_back("sensor '" + sensor + "' referenced by " + owner
                               + " has no telemetry");
        }
    };
    for (const Room& room : inv.rooms) {
        for (const Aisle& aisle : room.aisles) {
            for (const Rack& rack : aisle.racks) {
                for (const std::string& s : rack.intake_sensor_ids) {
                    check(s, "rack '" + rack.id + "' (intake)");
                }
                for (const std::string& s : rack.exhaust_sensor_ids) {
                    check(s, "rack '" + rack.id + "' (exhaust)");
                }
                for (const Server& server : rack.servers) {
                    if (server.cpu_utilization_sensor_id) {
                        check(*server.cpu_utilization_sensor_id, "server '" + server.id + "'");
                    }
                }
            }
        }
        for (const HvacUnit& unit : room.hvac_units) {
            check(unit.power_sensor_id, "HVAC unit '" + unit.id + "' (power)");
            check(unit.load_sensor_id, "HVAC unit '" + unit.id + "' (load)");
        }
        for (const Fan& fan : room.fans) {
            check(fan.power_sensor_id, "fan '" + fan.id + "' (power)");
            check(fan.airflow_sensor_id, "fan '" + fan.id + "' (airflow)");
        }
    }
}

} // namespace

AuditReport run_audit(const Inventory& inventory, const TelemetrySet& telemetry,
                      const AuditConfig& config)
{
    AuditReport report;
    report.data_center_id = inventory.data_center_id;
    report.mode = config.mode;
    report.generated_at = format_rfc3339(now_utc());
    report.tool_version = std::string(kToolName) + " " + std::string(kToolVersion);

    if (config.window) {
        if (config.window->start > config.window->end) {
            throw InvalidWindow("audit window start after end");
        }
        report.window = *config.window;
    } else if (const auto span = telemetry.full_span()) {
        report.window = {span->first, span->second};
    } else {
        report.window = {inventory.captured_at, inventory.captured_at};
        report.warnings.push_back("no telemetry loaded; window defaults to the capture instant");
    }

    collect_missing_sensors(inventory, telemetry, report.warnings);

    const ThresholdTable table = config.thresholds_override_path
                                     ? ThresholdTable::with_overrides(*config.thresholds_override_path)
                                     : ThresholdTable::builtin();
    const Ctx ctx{inventory, telemetry, report.window, table, config};

    using Eval = std::function<AuditItemResult(const Ctx&)>;
    const std::map<std::string_view, Eval> evaluators = {
        {item_ids::rti, eval_rti},
        {item_ids::alt_aisles, eval_alt_aisles_item},
        {item_ids::barriers, eval_barriers},
        {item_ids::cabling, eval_cabling},
        {item_ids::merv, eval_merv},
        {item_ids::ambient_temp, eval_ambient},
        {item_ids::rci, eval_rci},
        {item_ids::pue, eval_pue},
        {item_ids::dcie, eval_dcie},
        {item_ids::ere, eval_ere},
        {item_ids::hvacse, eval_hvacse},
        {item_ids::ae, eval_ae},
        {item_ids::cse, eval_cse},
        {item_ids::unused_servers, eval_unused_servers},
        {item_ids::cpu_util, eval_cpu_util},
        {item_ids::equip_eff, eval_equip_eff},
        {item_ids::power_sources, eval_power_sources},
        {item_ids::led, eval_led},
        {item_ids::dimming, eval_dimming},
        {item_ids::occupancy, eval_occupancy},
    };

    for (const AuditItem& item : audit_item_registry()) {
        if (config.mode == AuditMode::Lite && item.tier == AuditTier::Full) {
            continue;
        }
        report.results.push_back(evaluators.at(item.item_id)(ctx));
    }
    return report;
}

} // namespace dcaudit
