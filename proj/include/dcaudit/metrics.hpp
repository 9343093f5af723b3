#pragma once

#include "dcaudit/domain.hpp"

#include <span>
#include <string>
#include <string_view>

namespace dcaudit {

// Pure computation of the audit metrics. No I/O, no benchmark rating:
// numbers in, numbers out. Every function is callable concurrently.

enum class MetricId {
    Pue,
    Dcie,
    Ere,
    Hvacse,
    AirflowEfficiency,
    CoolingSystemEfficiency,
    Rti,
    RciHi,
    RciLo,
    ComplianceRatio,
    RenewableFraction,
    UnusedFraction,
    GflopPerWatt,
    UtilizationClass,
};

std::string_view to_string(MetricId id);
std::optional<MetricId> metric_id_from_string(std::string_view text);

struct MetricValue {
    MetricId metric_id = MetricId::ComplianceRatio;
    double value = 0.0;
    std::string unit;           // "" for dimensionless values
    std::string inputs_digest;  // which inputs produced this number

    bool operator==(const MetricValue&) const = default;
};

/// ASHRAE-style temperature envelope, all °F.
/// Invariant: min_allow < min_rec < max_rec < max_allow.
struct ThermalEnvelope {
    double min_allow_f = 0.0;
    double min_rec_f = 0.0;
    double max_rec_f = 0.0;
    double max_allow_f = 0.0;

    bool ordered() const
    {
        return min_allow_f < min_rec_f && min_rec_f < max_rec_f && max_rec_f < max_allow_f;
    }

    bool operator==(const ThermalEnvelope&) const = default;
};

/// PUE = total facility power / IT equipment power. Callers pass either
/// instantaneous kW or window-summed kWh; the ratio is the same. Throws
/// DivisionByZero when it_power is zero. facility < it is suspicious but
/// still computed; the audit layer attaches the warning.
MetricValue pue(double facility_power_kw, double it_power_kw);

/// DCIE = 1 / PUE.
MetricValue dcie(double pue_value);

/// ERE = (cooling + power + lighting + IT - reuse) / IT, all kWh over the
/// same window. 0 means every kWh brought in is reused. Throws
/// NegativeResult when reuse exceeds the total (inconsistent inputs).
MetricValue ere(double cooling_kwh, double power_dist_kwh, double lighting_kwh,
                double it_kwh, double reuse_kwh);

/// HVACSE = annual IT energy / annual HVAC energy.
MetricValue hvacse(double it_kwh_per_year, double hvac_kwh_per_year);

/// AE = total fan power (W) / total airflow (cfm).
MetricValue airflow_efficiency(double total_fan_power_w, double total_airflow_cfm);

/// CSE = mean cooling power (kW) / mean cooling load (tons).
MetricValue cooling_system_efficiency(double mean_cooling_power_kw, double mean_cooling_load_tons);

enum class AirBalance { Bypass, Optimal, Recirculation };

std::string_view to_string(AirBalance balance);

struct RtiResult {
    MetricValue metric;       // percent
    AirBalance balance = AirBalance::Optimal;
};

/// RTI = 100 x (return - supply) / equipment delta-T, percent.
/// < 100 flags net bypass air, > 100 net recirculation, exactly 100 is
/// optimal. Throws InvalidInput when return < supply, DivisionByZero when
/// the equipment delta is zero.
RtiResult rti(double return_temp_f, double supply_temp_f, double equipment_delta_t_f);

struct RciResult {
    MetricValue hi;  // over-temperature index, percent
    MetricValue lo;  // under-temperature index, percent
};

/// Rack Cooling Index over a set of intake temperatures:
///   RCI_HI = max(0, 1 - sum(max(T - max_rec, 0)) / (n * (max_allow - max_rec))) * 100
///   RCI_LO symmetric against the low limits.
/// Both land in [0, 100]; 100 means no reading leaves the recommended band.
RciResult rci(std::span<const double> intake_temps_f, const ThermalEnvelope& envelope);

/// compliant / total, in [0, 1]. Throws DivisionByZero when total is zero
/// (a vacuous audit item; callers report NotApplicable).
MetricValue compliance_ratio(std::size_t compliant, std::size_t total);

enum class TemperatureBand { Recommended, Allowable };

/// Fraction of readings inside the selected band, boundaries included.
MetricValue ambient_compliance(const TelemetrySeries& readings, const ThermalEnvelope& envelope,
                               TemperatureBand band);

enum class UtilizationClass { Under, Correct, Over };
enum class UtilizationAggregation { Mean, Max };

std::string_view to_string(UtilizationClass cls);
std::string_view to_string(UtilizationAggregation agg);

/// Under: u <= 50, Correct: 50 < u <= 85, Over: u > 85.
/// The three classes partition [0, 100].
UtilizationClass utilization_class(double aggregate_pct);

/// Aggregates the samples (mean or max) and carries the class in the
/// digest; the class is re-derivable from the value via utilization_class.
MetricValue classify_utilization(const TelemetrySeries& samples, UtilizationAggregation aggregation);

/// GFLOP/W = sustained GFLOP/s per watt drawn.
MetricValue gflop_per_watt(double rated_gflops, double power_w);

/// Renewable share of the energy drawn across all sources, in [0, 1].
MetricValue renewable_fraction(std::span<const PowerSource> sources);

// ---------------------------------------------------------------------------
// Advisory savings estimates. Always ranges (or an exact fraction), never
// forecasts: these quantify the published rules of thumb.
// ---------------------------------------------------------------------------

struct SavingsRange {
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const SavingsRange&) const = default;
};

/// Raising the inlet setpoint by delta_t_f saves 4-5% of energy cost per °F:
/// returns [0.04 * dT, 0.05 * dT].
SavingsRange setpoint_raise_savings(double delta_t_f);

/// Physical aisle separation cuts fan energy by 20-25%.
SavingsRange barrier_retrofit_savings();

/// An LED draws 75% less than the incandescent it replaces: watts saved.
double led_swap_savings_w(double incandescent_rated_w);

} // namespace dcaudit
