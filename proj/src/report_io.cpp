#include "dcaudit/report_io.hpp"

#include "dcaudit/errors.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace dcaudit {

namespace {

using nlohmann::json;

std::string shortest(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fixed2(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// -- json ---------------------------------------------------------------------

json to_json(const MetricValue& m)
{
    return {{"metric_id", std::string(to_string(m.metric_id))},
            {"value", m.value},
            {"unit", m.unit},
            {"inputs_digest", m.inputs_digest}};
}

MetricValue metric_from(const json& j, const std::string& where)
{
    MetricValue m;
    const auto id = metric_id_from_string(j.at("metric_id").get<std::string>());
    if (!id) {
        throw ParseError(where + ": unknown metric_id '" + j.at("metric_id").get<std::string>()
                         + "'");
    }
    m.metric_id = *id;
    m.value = j.at("value").get<double>();
    m.unit = j.at("unit").get<std::string>();
    m.inputs_digest = j.at("inputs_digest").get<std::string>();
    return m;
}

json to_json(const BenchmarkRating& r)
{
    return {{"metric_id", std::string(to_string(r.metric_id))},
            {"value", r.value},
            {"rating", std::string(to_string(r.rating))},
            {"thresholds",
             {{"standard", r.thresholds_used.standard},
              {"good", r.thresholds_used.good},
              {"better", r.thresholds_used.better},
              {"direction", std::string(to_string(r.thresholds_used.direction))}}}};
}

BenchmarkRating rating_from(const json& j, const std::string& where)
{
    BenchmarkRating r;
    const auto id = metric_id_from_string(j.at("metric_id").get<std::string>());
    const auto rating = rating_from_string(j.at("rating").get<std::string>());
    if (!id || !rating) {
        throw ParseError(where + ": bad rating entry");
    }
    r.metric_id = *id;
    r.rating = *rating;
    r.value = j.at("value").get<double>();
    const json& t = j.at("thresholds");
    const auto direction = direction_from_string(t.at("direction").get<std::string>());
    if (!direction) {
        throw ParseError(where + ": bad threshold direction");
    }
    r.thresholds_used = {t.at("standard").get<double>(), t.at("good").get<double>(),
                         t.at("better").get<double>(), *direction};
    return r;
}

json to_json(const AuditItemResult& r)
{
    json metrics = json::array();
    for (const MetricValue& m : r.metrics) {
        metrics.push_back(to_json(m));
    }
    json out{{"item_id", r.item_id},
             {"compliance", std::string(to_string(r.compliance))},
             {"goal_statement", r.goal_statement},
             {"actions", r.actions},
             {"warnings", r.warnings},
             {"metrics", std::move(metrics)}};
    out["rating"] = r.rating ? to_json(*r.rating) : json(nullptr);
    return out;
}

AuditItemResult result_from(const json& j)
{
    AuditItemResult r;
    r.item_id = j.at("item_id").get<std::string>();
    const std::string where = "report item '" + r.item_id + "'";
    const auto compliance = compliance_from_string(j.at("compliance").get<std::string>());
    if (!compliance) {
        throw ParseError(where + ": unknown compliance '" + j.at("compliance").get<std::string>()
                         + "'");
    }
    r.compliance = *compliance;
    r.goal_statement = j.at("goal_statement").get<std::string>();
    r.actions = j.at("actions").get<std::vector<std::string>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const json& mj : j.at("metrics")) {
        r.metrics.push_back(metric_from(mj, where));
    }
    if (!j.at("rating").is_null()) {
        r.rating = rating_from(j.at("rating"), where);
    }
    return r;
}

json report_to_json(const AuditReport& report)
{
    json results = json::array();
    for (const AuditItemResult& r : report.results) {
        results.push_back(to_json(r));
    }
    return {{"data_center_id", report.data_center_id},
            {"mode", std::string(to_string(report.mode))},
            {"window",
             {{"start", format_rfc3339(report.window.start)},
              {"end", format_rfc3339(report.window.end)}}},
            {"generated_at", report.generated_at},
            {"tool_version", report.tool_version},
            {"warnings", report.warnings},
            {"results", std::move(results)}};
}

// -- markdown -----------------------------------------------------------------

std::string render_markdown(const AuditReport& report)
{
    std::ostringstream out;
    out << "# Data Center Energy Audit: " << report.data_center_id << "\n\n";
    out << "- Mode: " << to_string(report.mode) << "\n";
    out << "- Window: " << format_rfc3339(report.window.start) << " to "
        << format_rfc3339(report.window.end) << "\n";
    out << "- Generated: " << report.generated_at << "\n";
    out << "- Tool: " << report.tool_version << "\n";
    if (!report.warnings.empty()) {
        out << "\nReport warnings:\n";
        for (const std::string& w : report.warnings) {
            out << "- " << w << "\n";
        }
    }

    constexpr std::array<AuditCategory, 6> category_order = {
        AuditCategory::CoolingAirAndAirManagement, AuditCategory::EnvironmentalConditions,
        AuditCategory::Global,                     AuditCategory::ItEquipment,
        AuditCategory::ItPowerDistributionChain,   AuditCategory::Lighting,
    };
    for (const AuditCategory category : category_order) {
        bool heading_written = false;
        for (const AuditItemResult& r : report.results) {
            const AuditItem* item = find_audit_item(r.item_id);
            const AuditCategory item_category = item ? item->category : AuditCategory::Global;
            if (item_category != category) {
                continue;
            }
            if (!heading_written) {
                out << "\n## " << category_display_name(category) << "\n";
                heading_written = true;
            }
            out << "\n### " << (item ? item->title : r.item_id) << " [" << r.item_id << "]\n\n";
            if (item) {
                out << "- Level: " << to_string(item->level) << " | Tier: "
                    << to_string(item->tier) << "\n";
            }
            out << "- Compliance: " << to_string(r.compliance) << "\n";
            if (r.rating) {
                out << "- Rating: " << to_string(r.rating->rating) << " (value "
                    << fixed2(r.rating->value) << "; standard "
                    << fixed2(r.rating->thresholds_used.standard) << " / good "
                    << fixed2(r.rating->thresholds_used.good) << " / better "
                    << fixed2(r.rating->thresholds_used.better) << ", "
                    << (r.rating->thresholds_used.direction == BetterDirection::LowerIsBetter
                            ? "lower is better"
                            : "higher is better")
                    << ")\n";
            }
            if (!r.metrics.empty()) {
                out << "- Metrics:\n";
                for (const MetricValue& m : r.metrics) {
                    out << "  - " << to_string(m.metric_id) << " = " << fixed2(m.value);
                    if (!m.unit.empty()) {
                        out << " " << m.unit;
                    }
                    if (!m.inputs_digest.empty()) {
                        out << " (" << m.inputs_digest << ")";
                    }
                    out << "\n";
                }
            }
            out << "- Goal: " << r.goal_statement << "\n";
            if (!r.actions.empty()) {
                out << "- Actions:\n";
                for (std::size_t i = 0; i < r.actions.size(); ++i) {
                    out << "  " << i + 1 << ". " << r.actions[i] << "\n";
                }
            }
            if (!r.warnings.empty()) {
                out << "- Warnings:\n";
                for (const std::string& w : r.warnings) {
                    out << "  - " << w << "\n";
                }
            }
        }
    }
    return out.str();
}

} // namespace

std::string render(const AuditReport& report, ReportFormat format)
{
    if (format == ReportFormat::Json) {
        return report_to_json(report).dump(2) + "\n";
    }
    return render_markdown(report);
}

AuditReport parse_report(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: invalid JSON: ") + e.what());
    }
    try {
        AuditReport report;
        report.data_center_id = doc.at("data_center_id").get<std::string>();
        const auto mode = audit_mode_from_string(doc.at("mode").get<std::string>());
        if (!mode) {
            throw ParseError("report: unknown mode '" + doc.at("mode").get<std::string>() + "'");
        }
        report.mode = *mode;
        report.window.start = parse_rfc3339(doc.at("window").at("start").get<std::string>());
        report.window.end = parse_rfc3339(doc.at("window").at("end").get<std::string>());
        report.generated_at = doc.at("generated_at").get<std::string>();
        report.tool_version = doc.at("tool_version").get<std::string>();
        report.warnings = doc.at("warnings").get<std::vector<std::string>>();
        for (const json& rj : doc.at("results")) {
            report.results.push_back(result_from(rj));
        }
        return report;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

AuditReport load_report(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open report file '" + path.string() + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_report(text);
}

void write_report(const AuditReport& report, ReportFormat format,
                  const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write report file '" + path.string() + "'");
    }
    out << render(report, format);
    if (!out) {
        throw IoError("error writing report file '" + path.string() + "'");
    }
}

std::string export_timeseries(const AuditReport& report, const TelemetrySet& telemetry)
{
    std::string out = "timestamp,series,value,unit\n";
    if (const TelemetrySeries* ambient = telemetry.find(sensor_ids::ambient)) {
        if (ambient->kind == SensorKind::TemperatureF) {
            const TelemetrySeries w = window(*ambient, report.window.start, report.window.end);
            for (const TelemetryPoint& p : w.points) {
                out += format_rfc3339(p.t) + ",ambient_temperature_f," + shortest(p.value) + ",f\n";
            }
        }
    }
    constexpr std::array<std::string_view, 6> global_items = {
        item_ids::pue, item_ids::dcie, item_ids::ere, item_ids::hvacse, item_ids::ae,
        item_ids::cse,
    };
    for (const AuditItemResult& r : report.results) {
        if (std::find(global_items.begin(), global_items.end(), r.item_id) == global_items.end()
            || r.metrics.empty()) {
            continue;
        }
        const MetricValue& m = r.metrics.front();
        out += format_rfc3339(report.window.end) + "," + std::string(to_string(m.metric_id)) + ","
               + shortest(m.value) + "," + (m.unit.empty() ? "ratio" : m.unit) + "\n";
    }
    return out;
}

std::string_view to_string(DiffDirection direction)
{
    switch (direction) {
    case DiffDirection::Improved: return "improved";
    case DiffDirection::Regressed: return "regressed";
    case DiffDirection::Unchanged: return "unchanged";
    }
    return "unknown";
}

namespace {

enum class BetterWhen { Lower, Higher, CloserTo100 };

BetterWhen better_when(std::string_view item_id)
{
    if (item_id == item_ids::pue || item_id == item_ids::ae || item_id == item_ids::cse
        || item_id == item_ids::ere || item_id == item_ids::unused_servers) {
        return BetterWhen::Lower;
    }
    if (item_id == item_ids::rti) {
        return BetterWhen::CloserTo100;
    }
    return BetterWhen::Higher;
}

DiffDirection judge(std::string_view item_id, double old_value, double new_value)
{
    double old_score = old_value;
    double new_score = new_value;
    switch (better_when(item_id)) {
    case BetterWhen::Lower:
        old_score = -old_value;
        new_score = -new_value;
        break;
    case BetterWhen::CloserTo100:
        old_score = -std::abs(old_value - 100.0);
        new_score = -std::abs(new_value - 100.0);
        break;
    case BetterWhen::Higher:
        break;
    }
    if (new_score > old_score) {
        return DiffDirection::Improved;
    }
    if (new_score < old_score) {
        return DiffDirection::Regressed;
    }
    return DiffDirection::Unchanged;
}

} // namespace

ReportDiff diff(const AuditReport& baseline, const AuditReport& current)
{
    if (baseline.data_center_id != current.data_center_id) {
        throw MismatchedReports("diff: reports describe different data centers ('"
                                + baseline.data_center_id + "' vs '" + current.data_center_id
                                + "')");
    }
    if (baseline.mode != current.mode) {
        throw MismatchedReports("diff: reports use different audit modes");
    }

    auto comparable = [](const AuditItemResult& r) {
        return !r.metrics.empty();
    };
    std::map<std::string_view, const AuditItemResult*> current_by_id;
    for (const AuditItemResult& r : current.results) {
        current_by_id.emplace(r.item_id, &r);
    }

    ReportDiff d;
    d.baseline_id = baseline.generated_at;
    d.current_id = current.generated_at;
    d.data_center_id = baseline.data_center_id;
    for (const AuditItemResult& old_result : baseline.results) {
        const auto it = current_by_id.find(old_result.item_id);
        const AuditItemResult* new_result = it == current_by_id.end() ? nullptr : it->second;
        if (new_result != nullptr) {
            current_by_id.erase(it);
        }
        const bool old_ok = comparable(old_result);
        const bool new_ok = new_result != nullptr && comparable(*new_result);
        if (old_ok && new_ok) {
            ItemDelta delta;
            delta.item_id = old_result.item_id;
            delta.old_value = old_result.metrics.front().value;
            delta.new_value = new_result->metrics.front().value;
            delta.old_rating = old_result.rating ? old_result.rating->rating : Rating::NotRated;
            delta.new_rating = new_result->rating ? new_result->rating->rating : Rating::NotRated;
            delta.direction = judge(delta.item_id, delta.old_value, delta.new_value);
            d.deltas.push_back(std::move(delta));
        } else if (old_ok) {
            d.only_in_baseline.push_back(old_result.item_id);
        } else if (new_ok) {
            d.only_in_current.push_back(old_result.item_id);
        }
    }
    for (const auto& [id, r] : current_by_id) {
        if (comparable(*r)) {
            d.only_in_current.push_back(std::string(id));
        }
    }
    return d;
}

std::string render_diff(const ReportDiff& d, ReportFormat format)
{
    if (format == ReportFormat::Json) {
        json deltas = json::array();
        for (const ItemDelta& delta : d.deltas) {
            deltas.push_back({{"item_id", delta.item_id},
                              {"old_value", delta.old_value},
                              {"new_value", delta.new_value},
                              {"old_rating", std::string(to_string(delta.old_rating))},
                              {"new_rating", std::string(to_string(delta.new_rating))},
                              {"direction", std::string(to_string(delta.direction))}});
        }
        const json doc{{"data_center_id", d.data_center_id},
                       {"baseline_id", d.baseline_id},
                       {"current_id", d.current_id},
                       {"deltas", std::move(deltas)},
                       {"only_in_baseline", d.only_in_baseline},
                       {"only_in_current", d.only_in_current}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "# Audit Diff: " << d.data_center_id << "\n\n";
    out << "- Baseline: " << d.baseline_id << "\n";
    out << "- Current: " << d.current_id << "\n\n";
    out << "| Item | Old | New | Rating | Direction |\n";
    out << "|------|-----|-----|--------|-----------|\n";
    for (const ItemDelta& delta : d.deltas) {
        out << "| " << delta.item_id << " | " << fixed2(delta.old_value) << " | "
            << fixed2(delta.new_value) << " | " << to_string(delta.old_rating) << " -> "
            << to_string(delta.new_rating) << " | " << to_string(delta.direction) << " |\n";
    }
    if (!d.only_in_baseline.empty()) {
        out << "\nOnly in baseline:";
        for (const std::string& id : d.only_in_baseline) {
            out << " " << id;
        }
        out << "\n";
    }
    if (!d.only_in_current.empty()) {
        out << "\nOnly in current:";
        for (const std::string& id : d.only_in_current) {
            out << " " << id;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace dcaudit
