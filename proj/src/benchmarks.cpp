#include "dcaudit/benchmarks.hpp"

#include "dcaudit/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace dcaudit {

std::string_view to_string(Rating rating)
{
    switch (rating) {
    case Rating::Better: return "better";
    case Rating::Good: return "good";
    case Rating::Standard: return "standard";
    case Rating::BelowStandard: return "below_standard";
    case Rating::NotRated: return "not_rated";
    }
    return "unknown";
}

std::optional<Rating> rating_from_string(std::string_view text)
{
    if (text == "better") return Rating::Better;
    if (text == "good") return Rating::Good;
    if (text == "standard") return Rating::Standard;
    if (text == "below_standard") return Rating::BelowStandard;
    if (text == "not_rated") return Rating::NotRated;
    return std::nullopt;
}

std::string_view to_string(BetterDirection direction)
{
    return direction == BetterDirection::LowerIsBetter ? "lower_is_better" : "higher_is_better";
}

std::optional<BetterDirection> direction_from_string(std::string_view text)
{
    if (text == "lower_is_better") return BetterDirection::LowerIsBetter;
    if (text == "higher_is_better") return BetterDirection::HigherIsBetter;
    return std::nullopt;
}

const ThresholdTable& ThresholdTable::builtin()
{
    static const ThresholdTable table = [] {
        ThresholdTable t;
        // DOE recommendations for the standard efficiency metrics. The AE
        // "better" score is 0.5 W/cfm, consistent with the other AE rows.
        t.metrics_[MetricId::Pue] = {2.0, 1.4, 1.1, BetterDirection::LowerIsBetter};
        t.metrics_[MetricId::Dcie] = {0.5, 0.7, 0.9, BetterDirection::HigherIsBetter};
        t.metrics_[MetricId::Hvacse] = {0.7, 1.4, 2.5, BetterDirection::HigherIsBetter};
        t.metrics_[MetricId::AirflowEfficiency] = {1.25, 0.75, 0.5, BetterDirection::LowerIsBetter};
        t.metrics_[MetricId::CoolingSystemEfficiency] = {1.1, 0.8, 0.6, BetterDirection::LowerIsBetter};
        // ASHRAE temperature envelopes, °F.
        t.envelopes_[AshraeClass::Class1] = {59.0, 64.4, 80.6, 89.6};
        t.envelopes_[AshraeClass::Class2] = {50.0, 64.4, 80.6, 95.0};
        return t;
    }();
    return table;
}

ThresholdTable ThresholdTable::with_overrides(const std::filesystem::path& json_path)
{
    std::ifstream in(json_path);
    if (!in) {
        throw IoError("cannot open thresholds file '" + json_path.string() + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("thresholds file '" + json_path.string() + "': " + e.what());
    }

    ThresholdTable table = builtin();
    try {
        if (doc.contains("metrics")) {
            for (const auto& [key, entry] : doc.at("metrics").items()) {
                const auto id = metric_id_from_string(key);
                if (!id) {
                    throw ParseError("thresholds file: unknown metric id '" + key + "'");
                }
                const auto existing = table.metrics_.find(*id);
                MetricThresholds t;
                t.direction = existing != table.metrics_.end()
                                  ? existing->second.direction
                                  : BetterDirection::LowerIsBetter;
                if (entry.contains("direction")) {
                    const auto dir = direction_from_string(entry.at("direction").get<std::string>());
                    if (!dir) {
                        throw ParseError("thresholds file: bad direction for '" + key + "'");
                    }
                    t.direction = *dir;
                }
                t.standard = entry.at("standard").get<double>();
                t.good = entry.at("good").get<double>();
                t.better = entry.at("better").get<double>();
                table.metrics_[*id] = t;
            }
        }
        if (doc.contains("envelopes")) {
            for (const auto& [key, entry] : doc.at("envelopes").items()) {
                AshraeClass cls;
                if (key == "class1") {
                    cls = AshraeClass::Class1;
                } else if (key == "class2") {
                    cls = AshraeClass::Class2;
                } else {
                    throw ParseError("thresholds file: unknown envelope '" + key + "'");
                }
                ThermalEnvelope env{entry.at("min_allow_f").get<double>(),
                                    entry.at("min_rec_f").get<double>(),
                                    entry.at("max_rec_f").get<double>(),
                                    entry.at("max_allow_f").get<double>()};
                if (!env.ordered()) {
                    throw ValidationError("thresholds file: envelope '" + key
                                          + "' limits out of order");
                }
                table.envelopes_[cls] = env;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("thresholds file '" + json_path.string() + "': " + e.what());
    }
    return table;
}

BenchmarkRating ThresholdTable::rate(const MetricValue& metric) const
{
    const auto it = metrics_.find(metric.metric_id);
    if (it == metrics_.end()) {
        return {metric.metric_id, metric.value, Rating::NotRated, {}};
    }
    const MetricThresholds& t = it->second;
    const auto meets = [&](double threshold) {
        return t.direction == BetterDirection::LowerIsBetter ? metric.value <= threshold
                                                             : metric.value >= threshold;
    };
    Rating rating = Rating::BelowStandard;
    if (meets(t.better)) {
        rating = Rating::Better;
    } else if (meets(t.good)) {
        rating = Rating::Good;
    } else if (meets(t.standard)) {
        rating = Rating::Standard;
    }
    return {metric.metric_id, metric.value, rating, t};
}

ThermalEnvelope ThresholdTable::envelope_for(AshraeClass cls) const
{
    return envelopes_.at(cls);
}

const MetricThresholds* ThresholdTable::thresholds_for(MetricId id) const
{
    const auto it = metrics_.find(id);
    return it == metrics_.end() ? nullptr : &it->second;
}

BenchmarkRating rate(const MetricValue& metric)
{
    return ThresholdTable::builtin().rate(metric);
}

ThermalEnvelope envelope_for(AshraeClass cls)
{
    return ThresholdTable::builtin().envelope_for(cls);
}

MervRule merv_rule_for(FilterPurpose purpose)
{
    if (purpose == FilterPurpose::ExternalIntake) {
        return {purpose, 11, 13};
    }
    return {purpose, 8, 20};
}

bool check_filter(const AirFilter& filter)
{
    const MervRule rule = merv_rule_for(filter.purpose);
    return filter.merv_rating >= rule.min_rating && filter.merv_rating <= rule.max_rating;
}

} // namespace dcaudit
