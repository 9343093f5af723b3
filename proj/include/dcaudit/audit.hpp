#pragma once

#include "dcaudit/benchmarks.hpp"
#include "dcaudit/domain.hpp"
#include "dcaudit/metrics.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dcaudit {

// The audit framework: a fixed registry of 20 items in six categories,
// two tiers (a 16-item "lite" subset and the 4 extra "full" items), and
// per-item evaluation binding inventory + telemetry + metrics + benchmarks
// into findings with recommended actions.

enum class AuditTier { Full, Lite };
enum class AuditMode { Full, Lite };

enum class AuditCategory {
    CoolingAirAndAirManagement,
    EnvironmentalConditions,
    Global,
    ItEquipment,
    ItPowerDistributionChain,
    Lighting,
};

enum class AuditLevel { Rack, Aisle, Filter, Server, Fan, HvacSystem, Room, DataCenter };

enum class Compliance { Pass, Fail, PartialNumeric, NotApplicable };

std::string_view to_string(AuditTier tier);
std::string_view to_string(AuditMode mode);
std::optional<AuditMode> audit_mode_from_string(std::string_view text);
std::string_view to_string(AuditCategory category);
std::string_view category_display_name(AuditCategory category);
std::string_view to_string(AuditLevel level);
std::string_view to_string(Compliance compliance);
std::optional<Compliance> compliance_from_string(std::string_view text);

namespace item_ids {
inline constexpr std::string_view rti = "RTI";
inline constexpr std::string_view alt_aisles = "ALT_AISLES";
inline constexpr std::string_view barriers = "BARRIERS";
inline constexpr std::string_view cabling = "CABLING";
inline constexpr std::string_view merv = "MERV";
inline constexpr std::string_view ambient_temp = "AMBIENT_TEMP";
inline constexpr std::string_view rci = "RCI";
inline constexpr std::string_view pue = "PUE";
inline constexpr std::string_view dcie = "DCIE";
inline constexpr std::string_view ere = "ERE";
inline constexpr std::string_view hvacse = "HVACSE";
inline constexpr std::string_view ae = "AE";
inline constexpr std::string_view cse = "CSE";
inline constexpr std::string_view unused_servers = "UNUSED_SERVERS";
inline constexpr std::string_view cpu_util = "CPU_UTIL";
inline constexpr std::string_view equip_eff = "EQUIP_EFF";
inline constexpr std::string_view power_sources = "POWER_SOURCES";
inline constexpr std::string_view led = "LED";
inline constexpr std::string_view dimming = "DIMMING";
inline constexpr std::string_view occupancy = "OCCUPANCY";
} // namespace item_ids

struct AuditItem {
    std::string item_id;
    std::string title;
    std::optional<std::string> alt_title;  // e.g. the section name when it differs
    AuditCategory category = AuditCategory::Global;
    AuditTier tier = AuditTier::Lite;
    AuditLevel level = AuditLevel::DataCenter;
};

/// All 20 items in category order: 16 lite, 4 full-only.
const std::vector<AuditItem>& audit_item_registry();

const AuditItem* find_audit_item(std::string_view item_id);

struct AuditItemResult {
    std::string item_id;
    std::vector<MetricValue> metrics;  // headline metric first
    std::optional<BenchmarkRating> rating;
    Compliance compliance = Compliance::NotApplicable;
    std::string goal_statement;
    std::vector<std::string> actions;
    std::vector<std::string> warnings;

    bool operator==(const AuditItemResult&) const = default;
};

struct AuditWindow {
    Timestamp start;
    Timestamp end;

    bool operator==(const AuditWindow&) const = default;
};

struct AuditConfig {
    AuditMode mode = AuditMode::Full;
    std::optional<AuditWindow> window;  // default: full telemetry span
    AshraeClass ashrae_class = AshraeClass::Class1;
    UtilizationAggregation utilization_aggregation = UtilizationAggregation::Mean;
    double equip_eff_threshold_gflop_per_w = 16.876;
    double rti_tolerance_pct = 5.0;  // how far from 100% still passes
    std::optional<std::filesystem::path> thresholds_override_path;
};

struct AuditReport {
    std::string data_center_id;
    AuditMode mode = AuditMode::Full;
    AuditWindow window;
    std::vector<AuditItemResult> results;  // registry (category) order
    std::vector<std::string> warnings;     // report-level: unresolved sensors etc.
    std::string generated_at;              // RFC 3339
    std::string tool_version;

    bool operator==(const AuditReport&) const = default;
};

/// Evaluates every item in the selected tier. Items with missing inputs
/// yield NotApplicable with a warning; the audit itself never aborts.
/// Deterministic: identical inputs produce identical reports modulo
/// generated_at.
AuditReport run_audit(const Inventory& inventory, const TelemetrySet& telemetry,
                      const AuditConfig& config);

/// The hot/cold alternation check on its own: an aisle is compliant iff
/// its role is assigned and every neighbor has the opposite role. Aisles
/// without neighbors are vacuously compliant, with a warning.
AuditItemResult eval_alternating_aisles(const std::vector<Aisle>& aisles);

} // namespace dcaudit
