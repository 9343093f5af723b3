#pragma once

#include "dcaudit/time.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcaudit {

// ---------------------------------------------------------------------------
// Inventory: the static asset tree captured at audit time. Immutable after
// load; safe to share across concurrent readers.
// ---------------------------------------------------------------------------

enum class ThermalRole { Hot, Cold, Unassigned };
enum class CablingState { Structured, Unstructured, Unknown };
enum class BulbType { Led, Incandescent, Fluorescent, Other };
enum class FilterPurpose { ExternalIntake, InternalRecirculation };
enum class PowerSourceKind { Renewable, NonRenewable };

struct Server {
    std::string id;
    bool in_use = true;
    double rated_gflops = 0.0;   // sustained GFLOP/s; 0 = unknown rating
    double measured_power_w = 0.0;
    std::optional<std::string> cpu_utilization_sensor_id;

    bool operator==(const Server&) const = default;
};

struct Rack {
    std::string id;
    CablingState cabling = CablingState::Unknown;
    std::vector<std::string> intake_sensor_ids;   // may be empty: rack is then
    std::vector<std::string> exhaust_sensor_ids;  // skipped by RCI/RTI with a warning
    std::vector<Server> servers;

    bool operator==(const Rack&) const = default;
};

struct Aisle {
    std::string id;
    ThermalRole thermal_role = ThermalRole::Unassigned;
    bool barrier_installed = false;
    std::vector<Rack> racks;
    std::vector<std::string> neighbor_ids;  // adjacent aisles, in floor order

    bool operator==(const Aisle&) const = default;
};

struct AirFilter {
    std::string id;
    int merv_rating = 1;  // valid range [1, 20]
    FilterPurpose purpose = FilterPurpose::ExternalIntake;

    bool operator==(const AirFilter&) const = default;
};

struct Lamp {
    std::string id;
    BulbType bulb = BulbType::Other;
    bool dimmable = false;
    bool occupancy_sensor = false;
    double rated_power_w = 0.0;

    bool operator==(const Lamp&) const = default;
};

struct HvacUnit {
    std::string id;
    std::string power_sensor_id;  // kind power_kw
    std::string load_sensor_id;   // kind cooling_load_tons

    bool operator==(const HvacUnit&) const = default;
};

struct Fan {
    std::string id;
    std::string power_sensor_id;    // kind power_w
    std::string airflow_sensor_id;  // kind airflow_cfm

    bool operator==(const Fan&) const = default;
};

struct Room {
    std::string id;
    std::vector<Aisle> aisles;
    std::vector<AirFilter> filters;
    std::vector<Lamp> lamps;
    std::vector<HvacUnit> hvac_units;
    std::vector<Fan> fans;

    bool operator==(const Room&) const = default;
};

struct PowerSource {
    std::string id;
    PowerSourceKind kind = PowerSourceKind::NonRenewable;
    double energy_supplied_kwh = 0.0;  // over the audit window

    bool operator==(const PowerSource&) const = default;
};

struct Inventory {
    std::string data_center_id;
    std::vector<Room> rooms;
    std::vector<PowerSource> power_sources;
    Timestamp captured_at;

    bool operator==(const Inventory&) const = default;
};

/// Checks every structural invariant (unique ids, neighbor references,
/// MERV range, server power consistency...). Throws ValidationError with
/// the offending id in the message. load_inventory calls this; fixture
/// output must pass it untouched.
void validate(const Inventory& inventory);

// ---------------------------------------------------------------------------
// Telemetry: timestamped sensor readings keyed by sensor id and kind.
// ---------------------------------------------------------------------------

enum class SensorKind {
    TemperatureF,
    PowerW,
    PowerKw,
    AirflowCfm,
    CoolingLoadTons,
    EnergyKwhAnnual,
    CpuUtilizationPct,
};

std::string_view to_string(SensorKind kind);
std::optional<SensorKind> sensor_kind_from_string(std::string_view text);

struct TelemetryPoint {
    Timestamp t;
    double value = 0.0;

    bool operator==(const TelemetryPoint&) const = default;
};

struct TelemetrySeries {
    std::string sensor_id;
    SensorKind kind = SensorKind::TemperatureF;
    std::vector<TelemetryPoint> points;  // strictly increasing timestamps

    bool operator==(const TelemetrySeries&) const = default;
};

/// Checks the series invariants: strictly increasing timestamps, finite
/// values, utilization within [0, 100]. Throws ValidationError.
void validate(const TelemetrySeries& series);

/// The sub-series with start <= t <= end (both ends included). May be empty.
/// Throws InvalidWindow when start > end.
TelemetrySeries window(const TelemetrySeries& series, Timestamp start, Timestamp end);

/// All loaded series, keyed by sensor id. Immutable after load.
class TelemetrySet {
public:
    TelemetrySet() = default;

    /// Validates and adds a series; rejects duplicate sensor ids.
    void insert(TelemetrySeries series);

    const TelemetrySeries* find(std::string_view sensor_id) const;
    bool contains(std::string_view sensor_id) const { return find(sensor_id) != nullptr; }
    std::size_t size() const { return series_.size(); }
    bool empty() const { return series_.empty(); }

    auto begin() const { return series_.begin(); }
    auto end() const { return series_.end(); }

    /// Smallest interval covering every point of every series.
    /// Empty set (or all-empty series) yields nullopt.
    std::optional<std::pair<Timestamp, Timestamp>> full_span() const;

    bool operator==(const TelemetrySet&) const = default;

private:
    std::map<std::string, TelemetrySeries, std::less<>> series_;
};

// ---------------------------------------------------------------------------
// Reserved sensor ids. The inventory schema binds equipment-level sensors
// (rack intakes, fan power...) explicitly; data-center-scope meters are
// bound by these well-known ids instead.
// ---------------------------------------------------------------------------

namespace sensor_ids {

inline constexpr std::string_view facility_power = "facility_power";        // power_kw or power_w
inline constexpr std::string_view it_power = "it_power";                    // power_kw or power_w
inline constexpr std::string_view cooling_power = "cooling_power";          // power_kw (ERE cooling term)
inline constexpr std::string_view distribution_power = "distribution_power";// power_kw (ERE power term)
inline constexpr std::string_view lighting_power = "lighting_power";        // power_kw (ERE lighting term)
inline constexpr std::string_view reuse_power = "reuse_power";              // power_kw (ERE reuse term)
inline constexpr std::string_view hvac_power = "hvac_power";                // power_kw (HVACSE denominator)
inline constexpr std::string_view it_energy_annual = "it_energy_annual";    // energy_kwh_annual
inline constexpr std::string_view hvac_energy_annual = "hvac_energy_annual";// energy_kwh_annual
inline constexpr std::string_view ambient = "ambient";                      // temperature_f

/// Per-room air-handler temperatures used by RTI.
std::string room_return_temp(std::string_view room_id);
std::string room_supply_temp(std::string_view room_id);

} // namespace sensor_ids

} // namespace dcaudit
