#pragma once

#include "dcaudit/domain.hpp"
#include "dcaudit/metrics.hpp"

#include <filesystem>
#include <map>
#include <optional>

namespace dcaudit {

enum class Rating { Better, Good, Standard, BelowStandard, NotRated };
enum class BetterDirection { LowerIsBetter, HigherIsBetter };
enum class AshraeClass { Class1, Class2 };

std::string_view to_string(Rating rating);
std::optional<Rating> rating_from_string(std::string_view text);
std::string_view to_string(BetterDirection direction);
std::optional<BetterDirection> direction_from_string(std::string_view text);

struct MetricThresholds {
    double standard = 0.0;
    double good = 0.0;
    double better = 0.0;
    BetterDirection direction = BetterDirection::LowerIsBetter;

    bool operator==(const MetricThresholds&) const = default;
};

struct BenchmarkRating {
    MetricId metric_id = MetricId::Pue;
    double value = 0.0;
    Rating rating = Rating::NotRated;
    MetricThresholds thresholds_used;

    bool operator==(const BenchmarkRating&) const = default;
};

/// DOE scores and ASHRAE envelopes as data. The built-in table carries the
/// published values; organizations may override entries from a JSON file.
class ThresholdTable {
public:
    /// The published DOE scores (PUE, DCIE, HVACSE, AE, CSE) and the
    /// class 1/2 ASHRAE envelopes.
    static const ThresholdTable& builtin();

    /// Built-in values with overrides applied on top. The file holds
    /// optional "metrics" {id: {standard, good, better}} and "envelopes"
    /// {class1/class2: {min_allow_f, min_rec_f, max_rec_f, max_allow_f}}.
    static ThresholdTable with_overrides(const std::filesystem::path& json_path);

    /// Best level whose threshold the value meets; thresholds are inclusive
    /// (a PUE of exactly 1.4 rates Good). Metrics without a published score
    /// rate NotRated.
    BenchmarkRating rate(const MetricValue& metric) const;

    ThermalEnvelope envelope_for(AshraeClass cls) const;
    const MetricThresholds* thresholds_for(MetricId id) const;

private:
    std::map<MetricId, MetricThresholds> metrics_;
    std::map<AshraeClass, ThermalEnvelope> envelopes_;
};

/// rate/envelope_for against the built-in table.
BenchmarkRating rate(const MetricValue& metric);
ThermalEnvelope envelope_for(AshraeClass cls);

/// Acceptable MERV range per filter purpose: outside air must land in
/// [11, 13]; recirculated air needs at least MERV 8.
struct MervRule {
    FilterPurpose purpose = FilterPurpose::ExternalIntake;
    int min_rating = 1;
    int max_rating = 20;
};

MervRule merv_rule_for(FilterPurpose purpose);
bool check_filter(const AirFilter& filter);

} // namespace dcaudit
