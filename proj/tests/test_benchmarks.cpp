#include "dcaudit/benchmarks.hpp"

#include "dcaudit/errors.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

using namespace dcaudit;

namespace {

MetricValue metric(MetricId id, double value)
{
    return {id, value, "", ""};
}

int rank(Rating r)
{
    switch (r) {
    case Rating::Better: return 3;
    case Rating::Good: return 2;
    case Rating::Standard: return 1;
    case Rating::BelowStandard: return 0;
    case Rating::NotRated: return -1;
    }
    return -1;
}

} // namespace

TEST_CASE("every published threshold rates at its own level")
{
    struct Golden {
        MetricId id;
        double value;
        Rating expected;
    };
    const Golden golden[] = {
        {MetricId::Pue, 2.0, Rating::Standard},
        {MetricId::Pue, 1.4, Rating::Good},
        {MetricId::Pue, 1.1, Rating::Better},
        {MetricId::Dcie, 0.5, Rating::Standard},
        {MetricId::Dcie, 0.7, Rating::Good},
        {MetricId::Dcie, 0.9, Rating::Better},
        {MetricId::Hvacse, 0.7, Rating::Standard},
        {MetricId::Hvacse, 1.4, Rating::Good},
        {MetricId::Hvacse, 2.5, Rating::Better},
        {MetricId::AirflowEfficiency, 1.25, Rating::Standard},
        {MetricId::AirflowEfficiency, 0.75, Rating::Good},
        {MetricId::AirflowEfficiency, 0.5, Rating::Better},
        {MetricId::CoolingSystemEfficiency, 1.1, Rating::Standard},
        {MetricId::CoolingSystemEfficiency, 0.8, Rating::Good},
        {MetricId::CoolingSystemEfficiency, 0.6, Rating::Better},
    };
    for (const Golden& g : golden) {
        CAPTURE(to_string(g.id));
        CAPTURE(g.value);
        CHECK(rate(metric(g.id, g.value)).rating == g.expected);
    }
}

TEST_CASE("values worse than standard rate below standard")
{
    CHECK(rate(metric(MetricId::Pue, 2.5)).rating == Rating::BelowStandard);
    CHECK(rate(metric(MetricId::Dcie, 0.4)).rating == Rating::BelowStandard);
    CHECK(rate(metric(MetricId::Hvacse, 0.69)).rating == Rating::BelowStandard);
    CHECK(rate(metric(MetricId::AirflowEfficiency, 1.5)).rating == Rating::BelowStandard);
    CHECK(rate(metric(MetricId::CoolingSystemEfficiency, 1.2)).rating == Rating::BelowStandard);
}

TEST_CASE("exactly the five published metrics are rated")
{
    const MetricId all_ids[] = {
        MetricId::Pue,
        MetricId::Dcie,
        MetricId::Ere,
        MetricId::Hvacse,
        MetricId::AirflowEfficiency,
        MetricId::CoolingSystemEfficiency,
        MetricId::Rti,
        MetricId::RciHi,
        MetricId::RciLo,
        MetricId::ComplianceRatio,
        MetricId::RenewableFraction,
        MetricId::UnusedFraction,
        MetricId::GflopPerWatt,
        MetricId::UtilizationClass,
    };
    const std::set<MetricId> rated_ids = {MetricId::Pue, MetricId::Dcie, MetricId::Hvacse,
                                          MetricId::AirflowEfficiency,
                                          MetricId::CoolingSystemEfficiency};
    for (const MetricId id : all_ids) {
        CAPTURE(to_string(id));
        const bool produced_rating = rate(metric(id, 1.0)).rating != Rating::NotRated;
        CHECK(produced_rating == rated_ids.contains(id));
    }
}

TEST_CASE("rating is monotone in the metric value")
{
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> value(0.0, 3.0);
    const MetricId rated_ids[] = {MetricId::Pue, MetricId::Dcie, MetricId::Hvacse,
                                  MetricId::AirflowEfficiency, MetricId::CoolingSystemEfficiency};
    for (const MetricId id : rated_ids) {
        const BetterDirection direction = ThresholdTable::builtin().thresholds_for(id)->direction;
        for (int i = 0; i < 300; ++i) {
            double a = value(rng);
            double b = value(rng);
            if (a > b) {
                std::swap(a, b);
            }
            const int rank_low = rank(rate(metric(id, a)).rating);
            const int rank_high = rank(rate(metric(id, b)).rating);
            if (direction == BetterDirection::LowerIsBetter) {
                CHECK(rank_low >= rank_high);
            } else {
                CHECK(rank_high >= rank_low);
            }
        }
    }
}

TEST_CASE("ashrae envelopes carry the published limits")
{
    const ThermalEnvelope class1 = envelope_for(AshraeClass::Class1);
    CHECK(class1.min_allow_f == 59.0);
    CHECK(class1.min_rec_f == 64.4);
    CHECK(class1.max_rec_f == 80.6);
    CHECK(class1.max_allow_f == 89.6);
    CHECK(class1.ordered());

    const ThermalEnvelope class2 = envelope_for(AshraeClass::Class2);
    CHECK(class2.min_allow_f == 50.0);
    CHECK(class2.max_allow_f == 95.0);
    CHECK(class2.ordered());

    // both classes share the recommended band
    CHECK(class1.min_rec_f == class2.min_rec_f);
    CHECK(class1.max_rec_f == class2.max_rec_f);
}

TEST_CASE("filter rules: outside air wants MERV 11-13, recirculated air at least 8")
{
    CHECK(check_filter({"f", 12, FilterPurpose::ExternalIntake}));
    CHECK(check_filter({"f", 11, FilterPurpose::ExternalIntake}));
    CHECK(check_filter({"f", 13, FilterPurpose::ExternalIntake}));
    CHECK_FALSE(check_filter({"f", 8, FilterPurpose::ExternalIntake}));
    CHECK_FALSE(check_filter({"f", 14, FilterPurpose::ExternalIntake}));
    CHECK(check_filter({"f", 8, FilterPurpose::InternalRecirculation}));
    CHECK(check_filter({"f", 15, FilterPurpose::InternalRecirculation}));
    CHECK_FALSE(check_filter({"f", 7, FilterPurpose::InternalRecirculation}));

    const MervRule external = merv_rule_for(FilterPurpose::ExternalIntake);
    CHECK(external.min_rating == 11);
    CHECK(external.max_rating == 13);
    const MervRule internal = merv_rule_for(FilterPurpose::InternalRecirculation);
    CHECK(internal.min_rating == 8);
}

TEST_CASE("thresholds can be overridden from a JSON file")
{
    const auto path = std::filesystem::temp_directory_path() / "dcaudit_thresholds_test.json";
    {
        std::ofstream out(path);
        out << R"({
          "metrics": {"pue": {"standard": 1.9, "good": 1.3, "better": 1.05}},
          "envelopes": {"class1": {"min_allow_f": 60, "min_rec_f": 65, "max_rec_f": 80, "max_allow_f": 90}}
        })";
    }
    const ThresholdTable table = ThresholdTable::with_overrides(path);
    CHECK(table.rate(metric(MetricId::Pue, 1.95)).rating == Rating::BelowStandard);
    CHECK(table.rate(metric(MetricId::Pue, 1.3)).rating == Rating::Good);
    // untouched metrics keep the built-in values
    CHECK(table.rate(metric(MetricId::Dcie, 0.5)).rating == Rating::Standard);
    CHECK(table.envelope_for(AshraeClass::Class1).min_rec_f == 65.0);
    CHECK(table.envelope_for(AshraeClass::Class2).min_allow_f == 50.0);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(ThresholdTable::with_overrides("/nonexistent/thresholds.json"), IoError);
}
