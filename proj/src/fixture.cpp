#include "dcaudit/fixture.hpp"

#include "dcaudit/audit.hpp"
#include "dcaudit/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

namespace dcaudit {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1); derived from the raw word so the stream is
    /// identical on every platform.
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t below(std::uint64_t n)
    {
        return engine_() % n;
    }

private:
    std::mt19937_64 engine_;
};

/// Exactly floor(fraction * count) true flags, positions shuffled.
std::vector<bool> pick_flags(std::size_t count, double fraction, Rng& rng)
{
    const auto k = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(count) + 1e-9));
    std::vector<bool> flags(count, false);
    std::fill_n(flags.begin(), std::min(k, count), true);
    for (std::size_t i = count; i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(flags[i - 1], flags[j]);
    }
    return flags;
}

std::string tag(const char* prefix, std::size_t index)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s-%04zu", prefix, index + 1);
    return buf;
}

constexpr double kItPowerKw = 100.0;
constexpr double kRackIntakeOkF = 72.0;
constexpr double kRackIntakeHotF = 85.0;  // above recommended, inside allowable
constexpr double kEquipDeltaF = 25.0;
constexpr double kSupplyTempF = 65.0;
constexpr double kServerPowerW = 400.0;
constexpr double kSourceEnergyKwh = 100000.0;

// Items whose compliance level the generator can steer.
const std::set<std::string_view> kSteerableItems = {
    item_ids::alt_aisles,   item_ids::barriers,  item_ids::cabling,
    item_ids::merv,         item_ids::ambient_temp, item_ids::rci,
    item_ids::rti,          item_ids::unused_servers, item_ids::cpu_util,
    item_ids::equip_eff,    item_ids::power_sources, item_ids::led,
    item_ids::dimming,      item_ids::occupancy,
};

void check_profile(const FixtureProfile& p)
{
    if (p.racks < 1 || p.aisles < 1 || p.servers_per_rack < 1) {
        throw InfeasibleProfile("fixture: racks, aisles and servers_per_rack must be positive");
    }
    if (p.lamps < 0 || p.filters < 0 || p.fans < 0 || p.hvac_units < 0) {
        throw InfeasibleProfile("fixture: asset counts must be non-negative");
    }
    if (p.target_pue < 1.0) {
        throw InfeasibleProfile("fixture: target_pue below 1 needs more IT power than the "
                                "facility draws");
    }
    if (p.step_seconds <= 0) {
        throw InfeasibleProfile("fixture: step_seconds must be positive");
    }
    if (p.window_start > p.window_end) {
        throw InfeasibleProfile("fixture: window start after end");
    }
    for (const auto& [item_id, rate] : p.compliance_rates) {
        if (rate < 0.0 || rate > 1.0) {
            throw InfeasibleProfile("fixture: compliance rate for '" + item_id
                                    + "' outside [0, 1]");
        }
        if (find_audit_item(item_id) == nullptr) {
            throw InfeasibleProfile("fixture: unknown audit item '" + item_id
                                    + "' in compliance_rates");
        }
        if (!kSteerableItems.contains(std::string_view(item_id))) {
            throw InfeasibleProfile("fixture: compliance rate for '" + item_id
                                    + "' cannot be steered (metric-valued item)");
        }
    }
}

} // namespace

Fixture generate(const FixtureProfile& profile)
{
    check_profile(profile);

    Rng rng(profile.seed);
    const auto rate = [&profile](std::string_view item_id) {
        const auto it = profile.compliance_rates.find(std::string(item_id));
        return it == profile.compliance_rates.end() ? 1.0 : it->second;
    };

    const auto n_aisles = static_cast<std::size_t>(profile.aisles);
    const auto n_racks = static_cast<std::size_t>(profile.racks);
    const auto n_servers = n_racks * static_cast<std::size_t>(profile.servers_per_rack);
    const auto n_lamps = static_cast<std::size_t>(profile.lamps);
    const auto n_filters = static_cast<std::size_t>(profile.filters);
    const auto n_fans = static_cast<std::size_t>(profile.fans);
    const auto n_hvac = static_cast<std::size_t>(profile.hvac_units);

    Inventory inv;
    inv.data_center_id = "sim-" + std::to_string(profile.seed);
    inv.captured_at = profile.window_start;

    Room room;
    room.id = "room-0001";

    // Aisles. Compliant ones come in hot/cold neighbor pairs (an odd one is
    // isolated and vacuously compliant); non-compliant ones are isolated
    // with no role assigned.
    const auto alternating = static_cast<std::size_t>(
        std::floor(rate(item_ids::alt_aisles) * static_cast<double>(n_aisles) + 1e-9));
    const std::vector<bool> barrier_flags = pick_flags(n_aisles, rate(item_ids::barriers), rng);
    for (std::size_t i = 0; i < n_aisles; ++i) {
        Aisle aisle;
        aisle.id = tag("aisle", i);
        aisle.barrier_installed = barrier_flags[i];
        if (i < alternating) {
            const bool paired = (i % 2 == 0) ? i + 1 < alternating : true;
            aisle.thermal_role = (i % 2 == 0) ? ThermalRole::Hot : ThermalRole::Cold;
            if (paired) {
                aisle.neighbor_ids.push_back(tag("aisle", (i % 2 == 0) ? i + 1 : i - 1));
            }
        } else {
            aisle.thermal_role = ThermalRole::Unassigned;
        }
        room.aisles.push_back(std::move(aisle));
    }

    // Racks round-robin over the aisles; servers numbered globally.
    const std::vector<bool> structured = pick_flags(n_racks, rate(item_ids::cabling), rng);
    const std::vector<bool> cool_rack = pick_flags(n_racks, rate(item_ids::rci), rng);
    const std::vector<bool> in_use = pick_flags(n_servers, rate(item_ids::unused_servers), rng);
    const std::vector<bool> well_utilized = pick_flags(n_servers, rate(item_ids::cpu_util), rng);
    const std::vector<bool> efficient = pick_flags(n_servers, rate(item_ids::equip_eff), rng);
    std::size_t server_index = 0;
    for (std::size_t i = 0; i < n_racks; ++i) {
        Rack rack;
        rack.id = tag("rack", i);
        rack.cabling = structured[i] ? CablingState::Structured : CablingState::Unstructured;
        rack.intake_sensor_ids.push_back(rack.id + ".intake");
        rack.exhaust_sensor_ids.push_back(rack.id + ".exhaust");
        for (int s = 0; s < profile.servers_per_rack; ++s, ++server_index) {
            Server server;
            server.id = tag("server", server_index);
            server.in_use = in_use[server_index];
            server.measured_power_w = kServerPowerW;
            // 20 GFLOP/W clears the default efficiency bar, 10 does not.
            server.rated_gflops = (efficient[server_index] ? 20.0 : 10.0) * kServerPowerW;
            server.cpu_utilization_sensor_id = server.id + ".util";
            rack.servers.push_back(std::move(server));
        }
        room.aisles[i % n_aisles].racks.push_back(std::move(rack));
    }

    const std::vector<bool> compliant_filter = pick_flags(n_filters, rate(item_ids::merv), rng);
    for (std::size_t i = 0; i < n_filters; ++i) {
        AirFilter filter;
        filter.id = tag("filter", i);
        filter.purpose = (i % 2 == 0) ? FilterPurpose::ExternalIntake
                                      : FilterPurpose::InternalRecirculation;
        if (compliant_filter[i]) {
            filter.merv_rating = filter.purpose == FilterPurpose::ExternalIntake ? 12 : 8;
        } else {
            filter.merv_rating = filter.purpose == FilterPurpose::ExternalIntake ? 8 : 5;
        }
        room.filters.push_back(std::move(filter));
    }

    const std::vector<bool> led_flags = pick_flags(n_lamps, rate(item_ids::led), rng);
    const std::vector<bool> dim_flags = pick_flags(n_lamps, rate(item_ids::dimming), rng);
    const std::vector<bool> occ_flags = pick_flags(n_lamps, rate(item_ids::occupancy), rng);
    for (std::size_t i = 0; i < n_lamps; ++i) {
        Lamp lamp;
        lamp.id = tag("lamp", i);
        lamp.bulb = led_flags[i] ? BulbType::Led : BulbType::Incandescent;
        lamp.rated_power_w = led_flags[i] ? 10.0 : 60.0;
        lamp.dimmable = dim_flags[i];
        lamp.occupancy_sensor = occ_flags[i];
        room.lamps.push_back(std::move(lamp));
    }

    for (std::size_t i = 0; i < n_hvac; ++i) {
        HvacUnit unit;
        unit.id = tag("hvac", i);
        unit.power_sensor_id = unit.id + ".power";
        unit.load_sensor_id = unit.id + ".load";
        room.hvac_units.push_back(std::move(unit));
    }
    for (std::size_t i = 0; i < n_fans; ++i) {
        Fan fan;
        fan.id = tag("fan", i);
        fan.power_sensor_id = fan.id + ".power";
        fan.airflow_sensor_id = fan.id + ".airflow";
        room.fans.push_back(std::move(fan));
    }

    const double renewable_share = rate(item_ids::power_sources);
    if (renewable_share > 0.0) {
        inv.power_sources.push_back(
            {"source-renewable", PowerSourceKind::Renewable, renewable_share * kSourceEnergyKwh});
    }
    if (renewable_share < 1.0) {
        inv.power_sources.push_back({"source-grid", PowerSourceKind::NonRenewable,
                                     (1.0 - renewable_share) * kSourceEnergyKwh});
    }

    inv.rooms.push_back(std::move(room));
    validate(inv);

    // ---- telemetry ----------------------------------------------------------

    std::vector<Timestamp> ticks;
    for (Timestamp t = profile.window_start; t <= profile.window_end;
         t.secs += profile.step_seconds) {
        ticks.push_back(t);
    }

    TelemetrySet tel;
    const auto constant_series = [&ticks, &tel](std::string id, SensorKind kind, double value) {
        TelemetrySeries s;
        s.sensor_id = std::move(id);
        s.kind = kind;
        s.points.reserve(ticks.size());
        for (const Timestamp t : ticks) {
            s.points.push_back({t, value});
        }
        tel.insert(std::move(s));
    };

    constant_series(std::string(sensor_ids::it_power), SensorKind::PowerKw, kItPowerKw);
    constant_series(std::string(sensor_ids::facility_power), SensorKind::PowerKw,
                    profile.target_pue * kItPowerKw);
    const double overhead_kw = (profile.target_pue - 1.0) * kItPowerKw;
    constant_series(std::string(sensor_ids::cooling_power), SensorKind::PowerKw,
                    0.7 * overhead_kw);
    constant_series(std::string(sensor_ids::distribution_power), SensorKind::PowerKw,
                    0.2 * overhead_kw);
    constant_series(std::string(sensor_ids::lighting_power), SensorKind::PowerKw,
                    0.1 * overhead_kw);
    constant_series(std::string(sensor_ids::reuse_power), SensorKind::PowerKw, 0.0);

    // Annual energies sized for a "good" HVACSE of 1.4.
    {
        TelemetrySeries it_annual;
        it_annual.sensor_id = std::string(sensor_ids::it_energy_annual);
        it_annual.kind = SensorKind::EnergyKwhAnnual;
        it_annual.points.push_back({profile.window_start, 1400000.0});
        tel.insert(std::move(it_annual));
        TelemetrySeries hvac_annual;
        hvac_annual.sensor_id = std::string(sensor_ids::hvac_energy_annual);
        hvac_annual.kind = SensorKind::EnergyKwhAnnual;
        hvac_annual.points.push_back({profile.window_start, 1000000.0});
        tel.insert(std::move(hvac_annual));
    }

    // Ambient: floor(rate * n) readings inside the recommended band, the
    // rest parked above it (still allowable).
    {
        const std::vector<bool> ok = pick_flags(ticks.size(), rate(item_ids::ambient_temp), rng);
        TelemetrySeries ambient;
        ambient.sensor_id = std::string(sensor_ids::ambient);
        ambient.kind = SensorKind::TemperatureF;
        for (std::size_t i = 0; i < ticks.size(); ++i) {
            double value;
            if (ok[i]) {
                const double jitter = profile.ambient_jitter_f * (2.0 * rng.uniform() - 1.0);
                value = std::clamp(profile.ambient_mean_f + jitter, 64.4, 80.6);
            } else {
                value = kRackIntakeHotF;
            }
            ambient.points.push_back({ticks[i], value});
        }
        tel.insert(std::move(ambient));
    }

    // Rack intake/exhaust pairs (a fixed delta-T keeps RTI well defined)
    // and per-server utilization. cool_rack/well_utilized were drawn in
    // creation order, recovered here from the numeric id suffix.
    const auto index_of = [](const std::string& id) {
        return static_cast<std::size_t>(std::stoul(id.substr(id.find('-') + 1))) - 1;
    };
    for (const Aisle& aisle : inv.rooms.front().aisles) {
        for (const Rack& rack : aisle.racks) {
            const double intake = cool_rack[index_of(rack.id)] ? kRackIntakeOkF : kRackIntakeHotF;
            constant_series(rack.intake_sensor_ids.front(), SensorKind::TemperatureF, intake);
            constant_series(rack.exhaust_sensor_ids.front(), SensorKind::TemperatureF,
                            intake + kEquipDeltaF);
            for (const Server& server : rack.servers) {
                constant_series(*server.cpu_utilization_sensor_id, SensorKind::CpuUtilizationPct,
                                well_utilized[index_of(server.id)] ? 70.0 : 30.0);
            }
        }
    }

    // Room air handler: return - supply equals the equipment delta for an
    // RTI of exactly 100%; a half delta yields 50% (net bypass).
    {
        const bool rti_ok = static_cast<std::size_t>(
                                std::floor(rate(item_ids::rti) * 1.0 + 1e-9)) >= 1;
        const double return_temp = kSupplyTempF + (rti_ok ? kEquipDeltaF : kEquipDeltaF / 2.0);
        constant_series(sensor_ids::room_supply_temp(inv.rooms.front().id),
                        SensorKind::TemperatureF, kSupplyTempF);
        constant_series(sensor_ids::room_return_temp(inv.rooms.front().id),
                        SensorKind::TemperatureF, return_temp);
    }

    // Fans sized for AE 0.75 W/cfm, HVAC units for CSE 0.8 kW/ton.
    for (const Fan& fan : inv.rooms.front().fans) {
        constant_series(fan.power_sensor_id, SensorKind::PowerW, 187.5);
        constant_series(fan.airflow_sensor_id, SensorKind::AirflowCfm, 250.0);
    }
    for (const HvacUnit& unit : inv.rooms.front().hvac_units) {
        constant_series(unit.power_sensor_id, SensorKind::PowerKw, 40.0);
        constant_series(unit.load_sensor_id, SensorKind::CoolingLoadTons, 50.0);
    }

    return {std::move(inv), std::move(tel), "mt19937-64"};
}

std::string profile_json(const FixtureProfile& profile)
{
    nlohmann::json rates = nlohmann::json::object();
    for (const auto& [item_id, rate] : profile.compliance_rates) {
        rates[item_id] = rate;
    }
    const nlohmann::json doc{
        {"seed", profile.seed},
        {"prng", "mt19937-64"},
        {"racks", profile.racks},
        {"aisles", profile.aisles},
        {"servers_per_rack", profile.servers_per_rack},
        {"lamps", profile.lamps},
        {"filters", profile.filters},
        {"fans", profile.fans},
        {"hvac_units", profile.hvac_units},
        {"target_pue", profile.target_pue},
        {"ambient_mean_f", profile.ambient_mean_f},
        {"ambient_jitter_f", profile.ambient_jitter_f},
        {"compliance_rates", std::move(rates)},
        {"window_start", format_rfc3339(profile.window_start)},
        {"window_end", format_rfc3339(profile.window_end)},
        {"step_seconds", profile.step_seconds},
    };
    return doc.dump(2) + "\n";
}

} // namespace dcaudit
