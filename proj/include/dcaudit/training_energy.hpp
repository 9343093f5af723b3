#pragma once

#include <string>
#include <vector>

namespace dcaudit {

// Converts published training-compute figures (GFLOP) into electrical
// consumption and the equivalent number of average U.S. homes powered for
// one year.

struct TrainingWorkload {
    std::string model_name;
    double total_gflop = 0.0;  // must be > 0

    bool operator==(const TrainingWorkload&) const = default;
};

struct EstimatorParams {
    double gflop_per_watt = 16.876;     // conservative supercomputer-class efficiency
    double home_kwh_per_month = 900.0;  // average U.S. household draw

    bool operator==(const EstimatorParams&) const = default;
};

/// Electrical consumption of the workload in kWh.
///
/// The published conversion reads GFLOP / (GFLOP/W) as watt-hours and
/// divides by 1000; that arithmetic is reproduced as-is because the
/// reference table is the target. It is not dimensionally strict: reading
/// the quotient as watt-seconds instead (strict_units = true) gives values
/// 3600x smaller.
double consumption_kwh(const TrainingWorkload& workload, const EstimatorParams& params = {},
                       bool strict_units = false);

/// Average U.S. homes powered for one year by the given energy.
double homes_powered(double kwh, const EstimatorParams& params = {});

struct EnergyTableRow {
    std::string model;
    double gflop = 0.0;
    double kwh = 0.0;
    double homes = 0.0;

    bool operator==(const EnergyTableRow&) const = default;
};

/// The 17 reference NLP training workloads with computed consumption.
std::vector<EnergyTableRow> table1(const EstimatorParams& params = {}, bool strict_units = false);

/// CSV rendering with header "model,gflop,kwh,homes"; kwh and homes are
/// printed with two decimals like the reference table.
std::string table1_csv(const EstimatorParams& params = {}, bool strict_units = false);

} // namespace dcaudit
