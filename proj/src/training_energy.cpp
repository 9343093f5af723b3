#include "dcaudit/training_energy.hpp"

#include "dcaudit/errors.hpp"

#include <array>
#include <cstdio>
#include <string_view>

namespace dcaudit {

namespace {

struct ReferenceWorkload {
    std::string_view model;
    double gflop;
};

// Published training-compute estimates for 17 NLP models.
constexpr std::array<ReferenceWorkload, 17> kReferenceWorkloads = {{
    {"T5-Small", 1.8e11},
    {"T5-Base", 6.6e11},
    {"T5-Large", 2.31e12},
    {"T5-3B", 9e12},
    {"T5-11B", 3.3e13},
    {"BERT-Base", 1.64e11},
    {"BERT-Large", 5.33e11},
    {"RoBERTa-Base", 1.5e12},
    {"RoBERTa-Large", 4.26e12},
    {"GPT-3 Small", 2.25e11},
    {"GPT-3 Medium", 6.41e11},
    {"GPT-3 Large", 1.37e12},
    {"GPT-3 XL", 2.38e12},
    {"GPT-3 2.7B", 4.77e12},
    {"GPT-3 6.7B", 1.2e13},
    {"GPT-3 13B", 2.31e13},
    {"GPT-3 175B", 3.14e14},
}};

void check(const EstimatorParams& params)
{
    if (params.gflop_per_watt <= 0.0) {
        throw InvalidInput("estimator: gflop_per_watt must be positive");
    }
    if (params.home_kwh_per_month <= 0.0) {
        throw InvalidInput("estimator: home_kwh_per_month must be positive");
    }
}

} // namespace

double consumption_kwh(const TrainingWorkload& workload, const EstimatorParams& params,
                       bool strict_units)
{
    check(params);
    if (!(workload.total_gflop > 0.0)) {
        throw InvalidInput("estimator: total_gflop must be positive ('" + workload.model_name + "')");
    }
    const double kwh = workload.total_gflop / params.gflop_per_watt / 1000.0;
    return strict_units ? kwh / 3600.0 : kwh;
}

double homes_powered(double kwh, const EstimatorParams& params)
{
    check(params);
    if (kwh < 0.0) {
        throw InvalidInput("estimator: negative energy");
    }
    return kwh / (params.home_kwh_per_month * 12.0);
}

std::vector<EnergyTableRow> table1(const EstimatorParams& params, bool strict_units)
{
    std::vector<EnergyTableRow> rows;
    rows.reserve(kReferenceWorkloads.size());
    for (const ReferenceWorkload& ref : kReferenceWorkloads) {
        const TrainingWorkload workload{std::string(ref.model), ref.gflop};
        const double kwh = consumption_kwh(workload, params, strict_units);
        rows.push_back({workload.model_name, ref.gflop, kwh, homes_powered(kwh, params)});
    }
    return rows;
}

std::string table1_csv(const EstimatorParams& params, bool strict_units)
{
    std::string out = "model,gflop,kwh,homes\n";
    char buf[160];
    for (const EnergyTableRow& row : table1(params, strict_units)) {
        std::snprintf(buf, sizeof buf, "%s,%.6g,%.2f,%.2f\n", row.model.c_str(), row.gflop,
                      row.kwh, row.homes);
        out += buf;
    }
    return out;
}

} // namespace dcaudit
