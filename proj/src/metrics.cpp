#include "dcaudit/metrics.hpp"

#include "dcaudit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dcaudit {

namespace {

std::string fmt(double v)
{
    std::ostringstream oss;
    oss << v;
    return oss.str();
}

MetricValue make_metric(MetricId id, double value, std::string unit, std::string digest)
{
    if (!std::isfinite(value)) {
        throw InvalidInput(std::string(to_string(id)) + ": non-finite result from " + digest);
    }
    return {id, value, std::move(unit), std::move(digest)};
}

} // namespace

std::string_view to_string(MetricId id)
{
    switch (id) {
    case MetricId::Pue: return "pue";
    case MetricId::Dcie: return "dcie";
    case MetricId::Ere: return "ere";
    case MetricId::Hvacse: return "hvacse";
    case MetricId::AirflowEfficiency: return "ae";
    case MetricId::CoolingSystemEfficiency: return "cse";
    case MetricId::Rti: return "rti";
    case MetricId::RciHi: return "rci_hi";
    case MetricId::RciLo: return "rci_lo";
    case MetricId::ComplianceRatio: return "compliance_ratio";
    case MetricId::RenewableFraction: return "renewable_fraction";
    case MetricId::UnusedFraction: return "unused_fraction";
    case MetricId::GflopPerWatt: return "gflop_per_watt";
    case MetricId::UtilizationClass: return "utilization_class";
    }
    return "unknown";
}

std::optional<MetricId> metric_id_from_string(std::string_view text)
{
    if (text == "pue") return MetricId::Pue;
    if (text == "dcie") return MetricId::Dcie;
    if (text == "ere") return MetricId::Ere;
    if (text == "hvacse") return MetricId::Hvacse;
    if (text == "ae") return MetricId::AirflowEfficiency;
    if (text == "cse") return MetricId::CoolingSystemEfficiency;
    if (text == "rti") return MetricId::Rti;
    if (text == "rci_hi") return MetricId::RciHi;
    if (text == "rci_lo") return MetricId::RciLo;
    if (text == "compliance_ratio") return MetricId::ComplianceRatio;
    if (text == "renewable_fraction") return MetricId::RenewableFraction;
    if (text == "unused_fraction") return MetricId::UnusedFraction;
    if (text == "gflop_per_watt") return MetricId::GflopPerWatt;
    if (text == "utilization_class") return MetricId::UtilizationClass;
    return std::nullopt;
}

MetricValue pue(double facility_power_kw, double it_power_kw)
{
    if (it_power_kw == 0.0) {
        throw DivisionByZero("pue: IT power is zero");
    }
    return make_metric(MetricId::Pue, facility_power_kw / it_power_kw, "",
                       "facility=" + fmt(facility_power_kw) + " it=" + fmt(it_power_kw));
}

MetricValue dcie(double pue_value)
{
    if (pue_value == 0.0) {
        throw DivisionByZero("dcie: PUE is zero");
    }
    return make_metric(MetricId::Dcie, 1.0 / pue_value, "", "pue=" + fmt(pue_value));
}

MetricValue ere(double cooling_kwh, double power_dist_kwh, double lighting_kwh,
                double it_kwh, double reuse_kwh)
{
    if (it_kwh == 0.0) {
        throw DivisionByZero("ere: IT energy is zero");
    }
    // Left-to-right sum; reuse equal to the identically-ordered total gives
    // an exact zero.
    const double total = cooling_kwh + power_dist_kwh + lighting_kwh + it_kwh;
    if (reuse_kwh > total) {
        throw NegativeResult("ere: reuse energy " + fmt(reuse_kwh) + " exceeds total " + fmt(total));
    }
    return make_metric(MetricId::Ere, (total - reuse_kwh) / it_kwh, "",
                       "cooling=" + fmt(cooling_kwh) + " power=" + fmt(power_dist_kwh)
                           + " lighting=" + fmt(lighting_kwh) + " it=" + fmt(it_kwh)
                           + " reuse=" + fmt(reuse_kwh));
}

MetricValue hvacse(double it_kwh_per_year, double hvac_kwh_per_year)
{
    if (hvac_kwh_per_year == 0.0) {
        throw DivisionByZero("hvacse: HVAC energy is zero");
    }
    return make_metric(MetricId::Hvacse, it_kwh_per_year / hvac_kwh_per_year, "",
                       "it_kwh_yr=" + fmt(it_kwh_per_year) + " hvac_kwh_yr="
                           + fmt(hvac_kwh_per_year));
}

MetricValue airflow_efficiency(double total_fan_power_w, double total_airflow_cfm)
{
    if (total_airflow_cfm == 0.0) {
        throw DivisionByZero("ae: total airflow is zero");
    }
    return make_metric(MetricId::AirflowEfficiency, total_fan_power_w / total_airflow_cfm,
                       "W/cfm",
                       "fan_power_w=" + fmt(total_fan_power_w) + " airflow_cfm="
                           + fmt(total_airflow_cfm));
}

MetricValue cooling_system_efficiency(double mean_cooling_power_kw, double mean_cooling_load_tons)
{
    if (mean_cooling_load_tons == 0.0) {
        throw DivisionByZero("cse: cooling load is zero");
    }
    return make_metric(MetricId::CoolingSystemEfficiency,
                       mean_cooling_power_kw / mean_cooling_load_tons, "kW/ton",
                       "cooling_kw=" + fmt(mean_cooling_power_kw) + " load_tons="
                           + fmt(mean_cooling_load_tons));
}

std::string_view to_string(AirBalance balance)
{
    switch (balance) {
    case AirBalance::Bypass: return "bypass";
    case AirBalance::Optimal: return "optimal";
    case AirBalance::Recirculation: return "recirculation";
    }
    return "unknown";
}

RtiResult rti(double return_temp_f, double supply_temp_f, double equipment_delta_t_f)
{
    if (equipment_delta_t_f == 0.0) {
        throw DivisionByZero("rti: equipment delta-T is zero");
    }
    if (equipment_delta_t_f < 0.0) {
        throw InvalidInput("rti: negative equipment delta-T");
    }
    if (return_temp_f < supply_temp_f) {
        throw InvalidInput("rti: return temperature below supply temperature");
    }
    const double value = 100.0 * (return_temp_f - supply_temp_f) / equipment_delta_t_f;
    AirBalance balance = AirBalance::Optimal;
    if (value < 100.0) {
        balance = AirBalance::Bypass;
    } else if (value > 100.0) {
        balance = AirBalance::Recirculation;
    }
    return {make_metric(MetricId::Rti, value, "%",
                        "return=" + fmt(return_temp_f) + " supply=" + fmt(supply_temp_f)
                            + " equip_dt=" + fmt(equipment_delta_t_f)),
            balance};
}

RciResult rci(std::span<const double> intake_temps_f, const ThermalEnvelope& envelope)
{
    if (intake_temps_f.empty()) {
        throw EmptyInput("rci: no intake temperatures");
    }
    if (!envelope.ordered()) {
        throw InvalidInput("rci: envelope limits out of order");
    }
    double over_sum = 0.0;
    double under_sum = 0.0;
    for (const double t : intake_temps_f) {
        over_sum += std::max(t - envelope.max_rec_f, 0.0);
        under_sum += std::max(envelope.min_rec_f - t, 0.0);
    }
    const double n = static_cast<double>(intake_temps_f.size());
    const double hi = std::max(0.0, 1.0 - over_sum / (n * (envelope.max_allow_f - envelope.max_rec_f))) * 100.0;
    const double lo = std::max(0.0, 1.0 - under_sum / (n * (envelope.min_rec_f - envelope.min_allow_f))) * 100.0;
    const std::string digest = "n=" + std::to_string(intake_temps_f.size());
    return {make_metric(MetricId::RciHi, hi, "%", digest),
            make_metric(MetricId::RciLo, lo, "%", digest)};
}

MetricValue compliance_ratio(std::size_t compliant, std::size_t total)
{
    if (total == 0) {
        throw DivisionByZero("compliance_ratio: no items to rate");
    }
    if (compliant > total) {
        throw InvalidInput("compliance_ratio: compliant count exceeds total");
    }
    return make_metric(MetricId::ComplianceRatio,
                       static_cast<double>(compliant) / static_cast<double>(total), "",
                       std::to_string(compliant) + "/" + std::to_string(total));
}

MetricValue ambient_compliance(const TelemetrySeries& readings, const ThermalEnvelope& envelope,
                               TemperatureBand band)
{
    if (readings.points.empty()) {
        throw EmptyInput("ambient_compliance: no readings");
    }
    const double lo = band == TemperatureBand::Recommended ? envelope.min_rec_f : envelope.min_allow_f;
    const double hi = band == TemperatureBand::Recommended ? envelope.max_rec_f : envelope.max_allow_f;
    std::size_t ok = 0;
    for (const TelemetryPoint& p : readings.points) {
        if (p.value >= lo && p.value <= hi) {
            ++ok;
        }
    }
    return make_metric(MetricId::ComplianceRatio,
                       static_cast<double>(ok) / static_cast<double>(readings.points.size()), "",
                       "sensor=" + readings.sensor_id + " band="
                           + (band == TemperatureBand::Recommended ? "recommended" : "allowable")
                           + " " + std::to_string(ok) + "/"
                           + std::to_string(readings.points.size()));
}

std::string_view to_string(UtilizationClass cls)
{
    switch (cls) {
    case UtilizationClass::Under: return "under";
    case UtilizationClass::Correct: return "correct";
    case UtilizationClass::Over: return "over";
    }
    return "unknown";
}

std::string_view to_string(UtilizationAggregation agg)
{
    return agg == UtilizationAggregation::Mean ? "mean" : "max";
}

UtilizationClass utilization_class(double aggregate_pct)
{
    if (aggregate_pct <= 50.0) {
        return UtilizationClass::Under;
    }
    if (aggregate_pct <= 85.0) {
        return UtilizationClass::Correct;
    }
    return UtilizationClass::Over;
}

MetricValue classify_utilization(const TelemetrySeries& samples, UtilizationAggregation aggregation)
{
    if (samples.points.empty()) {
        throw EmptyInput("classify_utilization: no samples");
    }
    double aggregate = 0.0;
    if (aggregation == UtilizationAggregation::Mean) {
        for (const TelemetryPoint& p : samples.points) {
            aggregate += p.value;
        }
        aggregate /= static_cast<double>(samples.points.size());
    } else {
        for (const TelemetryPoint& p : samples.points) {
            aggregate = std::max(aggregate, p.value);
        }
    }
    return make_metric(MetricId::UtilizationClass, aggregate, "%",
                       "sensor=" + samples.sensor_id + " aggregation="
                           + std::string(to_string(aggregation)) + " class="
                           + std::string(to_string(utilization_class(aggregate))));
}

MetricValue gflop_per_watt(double rated_gflops, double power_w)
{
    if (power_w == 0.0) {
        throw DivisionByZero("gflop_per_watt: power is zero");
    }
    return make_metric(MetricId::GflopPerWatt, rated_gflops / power_w, "GFLOP/W",
                       "gflops=" + fmt(rated_gflops) + " power_w=" + fmt(power_w));
}

MetricValue renewable_fraction(std::span<const PowerSource> sources)
{
    double renewable = 0.0;
    double total = 0.0;
    for (const PowerSource& s : sources) {
        total += s.energy_supplied_kwh;
        if (s.kind == PowerSourceKind::Renewable) {
            renewable += s.energy_supplied_kwh;
        }
    }
    if (total == 0.0) {
        throw DivisionByZero("renewable_fraction: no energy drawn");
    }
    return make_metric(MetricId::RenewableFraction, renewable / total, "",
                       "renewable_kwh=" + fmt(renewable) + " total_kwh=" + fmt(total));
}

SavingsRange setpoint_raise_savings(double delta_t_f)
{
    if (delta_t_f < 0.0) {
        throw InvalidInput("setpoint_raise_savings: negative delta-T");
    }
    return {delta_t_f * 4.0 / 100.0, delta_t_f * 5.0 / 100.0};
}

SavingsRange barrier_retrofit_savings()
{
    return {0.20, 0.25};
}

double led_swap_savings_w(double incandescent_rated_w)
{
    if (incandescent_rated_w < 0.0) {
        throw InvalidInput("led_swap_savings_w: negative lamp power");
    }
    return incandescent_rated_w * 0.75;
}

} // namespace dcaudit
