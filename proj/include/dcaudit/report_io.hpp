#pragma once

#include "dcaudit/audit.hpp"

#include <filesystem>
#include <string>

namespace dcaudit {

enum class ReportFormat { Json, Markdown };

/// Json is lossless: parse_report(render(r, Json)) equals r field for
/// field, and re-rendering is byte-stable. Markdown groups results under
/// the six category headings in framework order.
std::string render(const AuditReport& report, ReportFormat format);

AuditReport parse_report(const std::string& json_text);
AuditReport load_report(const std::filesystem::path& path);
void write_report(const AuditReport& report, ReportFormat format,
                  const std::filesystem::path& path);

/// CSV `timestamp,series,value,unit`: the windowed ambient-temperature
/// readings plus one row per computed global metric, ready for external
/// plotting.
std::string export_timeseries(const AuditReport& report, const TelemetrySet& telemetry);

enum class DiffDirection { Improved, Regressed, Unchanged };

std::string_view to_string(DiffDirection direction);

struct ItemDelta {
    std::string item_id;
    double old_value = 0.0;
    double new_value = 0.0;
    Rating old_rating = Rating::NotRated;
    Rating new_rating = Rating::NotRated;
    DiffDirection direction = DiffDirection::Unchanged;

    bool operator==(const ItemDelta&) const = default;
};

struct ReportDiff {
    std::string baseline_id;   // generated_at of the baseline report
    std::string current_id;
    std::string data_center_id;
    std::vector<ItemDelta> deltas;
    std::vector<std::string> only_in_baseline;
    std::vector<std::string> only_in_current;

    bool operator==(const ReportDiff&) const = default;
};

/// Compares two reports for the same data center and mode, item by item.
/// Direction honors each metric's better-direction (PUE down is Improved,
/// DCIE up is Improved, RTI closer to 100 is Improved). Items carrying no
/// computed metric on either side are listed separately.
ReportDiff diff(const AuditReport& baseline, const AuditReport& current);

std::string render_diff(const ReportDiff& d, ReportFormat format);

} // namespace dcaudit
