#include "dcaudit/domain.hpp"

#include "dcaudit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace dcaudit {

namespace {

void add_unique(std::unordered_set<std::string>& seen, const std::string& id,
                const char* what)
{
    if (id.empty()) {
        throw ValidationError(std::string(what) + " with empty id");
    }
    if (!seen.insert(id).second) {
        throw ValidationError("duplicate id '" + id + "' (" + what + ")");
    }
}

} // namespace

void validate(const Inventory& inventory)
{
    if (inventory.data_center_id.empty()) {
        throw ValidationError("data_center_id must be non-empty");
    }

    // Rooms, aisles, racks, servers, filters and lamps share one id space.
    std::unordered_set<std::string> ids;
    std::unordered_set<std::string> aisle_ids;
    for (const Room& room : inventory.rooms) {
        add_unique(ids, room.id, "room");
        for (const Aisle& aisle : room.aisles) {
            add_unique(ids, aisle.id, "aisle");
            aisle_ids.insert(aisle.id);
        }
    }

    for (const Room& room : inventory.rooms) {
        for (const Aisle& aisle : room.aisles) {
            for (const std::string& neighbor : aisle.neighbor_ids) {
                if (neighbor == aisle.id) {
                    throw ValidationError("aisle '" + aisle.id + "' lists itself as neighbor");
                }
                if (!aisle_ids.contains(neighbor)) {
                    throw ValidationError("dangling aisle reference: aisle '" + aisle.id
                                          + "' lists unknown neighbor '" + neighbor + "'");
                }
            }
            for (const Rack& rack : aisle.racks) {
                add_unique(ids, rack.id, "rack");
                for (const Server& server : rack.servers) {
                    add_unique(ids, server.id, "server");
                    if (server.rated_gflops < 0.0) {
                        throw ValidationError("server '" + server.id + "': negative rated_gflops");
                    }
                    if (server.measured_power_w < 0.0) {
                        throw ValidationError("server '" + server.id + "': negative measured_power_w");
                    }
                    if (server.rated_gflops > 0.0 && server.measured_power_w <= 0.0) {
                        throw ValidationError("server '" + server.id
                                              + "': rated_gflops > 0 requires measured_power_w > 0");
                    }
                }
            }
        }
        for (const AirFilter& filter : room.filters) {
            add_unique(ids, filter.id, "filter");
            if (filter.merv_rating < 1 || filter.merv_rating > 20) {
                throw ValidationError("filter '" + filter.id + "': merv_rating "
                                      + std::to_string(filter.merv_rating)
                                      + " outside [1, 20]");
            }
        }
        for (const Lamp& lamp : room.lamps) {
            add_unique(ids, lamp.id, "lamp");
            if (lamp.rated_power_w < 0.0) {
                throw ValidationError("lamp '" + lamp.id + "': negative rated_power_w");
            }
        }
        std::unordered_set<std::string> unit_ids;
        for (const HvacUnit& unit : room.hvac_units) {
            add_unique(unit_ids, unit.id, "hvac unit");
        }
        for (const Fan& fan : room.fans) {
            add_unique(unit_ids, fan.id, "fan");
        }
    }

    std::unordered_set<std::string> source_ids;
    for (const PowerSource& source : inventory.power_sources) {
        add_unique(source_ids, source.id, "power source");
        if (source.energy_supplied_kwh < 0.0) {
            throw ValidationError("power source '" + source.id + "': negative energy_supplied_kwh");
        }
    }
}

std::string_view to_string(SensorKind kind)
{
    switch (kind) {
    case SensorKind::TemperatureF: return "temperature_f";
    case SensorKind::PowerW: return "power_w";
    case SensorKind::PowerKw: return "power_kw";
    case SensorKind::AirflowCfm: return "airflow_cfm";
    case SensorKind::CoolingLoadTons: return "cooling_load_tons";
    case SensorKind::EnergyKwhAnnual: return "energy_kwh_annual";
    case SensorKind::CpuUtilizationPct: return "cpu_utilization_pct";
    }
    return "unknown";
}

std::optional<SensorKind> sensor_kind_from_string(std::string_view text)
{
    if (text == "temperature_f") return SensorKind::TemperatureF;
    if (text == "power_w") return SensorKind::PowerW;
    if (text == "power_kw") return SensorKind::PowerKw;
    if (text == "airflow_cfm") return SensorKind::AirflowCfm;
    if (text == "cooling_load_tons") return SensorKind::CoolingLoadTons;
    if (text == "energy_kwh_annual") return SensorKind::EnergyKwhAnnual;
    if (text == "cpu_utilization_pct") return SensorKind::CpuUtilizationPct;
    return std::nullopt;
}

void validate(const TelemetrySeries& series)
{
    if (series.sensor_id.empty()) {
        throw ValidationError("telemetry series with empty sensor_id");
    }
    const TelemetryPoint* prev = nullptr;
    for (const TelemetryPoint& point : series.points) {
        if (!std::isfinite(point.value)) {
            throw ValidationError("sensor '" + series.sensor_id + "': non-finite value at "
                                  + format_rfc3339(point.t));
        }
        if (prev != nullptr && !(prev->t < point.t)) {
            throw ValidationError("sensor '" + series.sensor_id
                                  + "': non-monotonic timestamps at " + format_rfc3339(point.t));
        }
        if (series.kind == SensorKind::CpuUtilizationPct
            && (point.value < 0.0 || point.value > 100.0)) {
            throw ValidationError("sensor '" + series.sensor_id + "': utilization "
                                  + std::to_string(point.value) + " outside [0, 100]");
        }
        prev = &point;
    }
}

TelemetrySeries window(const TelemetrySeries& series, Timestamp start, Timestamp end)
{
    if (start > end) {
        throw InvalidWindow("window start " + format_rfc3339(start) + " after end "
                            + format_rfc3339(end));
    }
    TelemetrySeries out;
    out.sensor_id = series.sensor_id;
    out.kind = series.kind;
    const auto first = std::lower_bound(series.points.begin(), series.points.end(), start,
                                        [](const TelemetryPoint& p, Timestamp t) { return p.t < t; });
    const auto last = std::upper_bound(series.points.begin(), series.points.end(), end,
                                       [](Timestamp t, const TelemetryPoint& p) { return t < p.t; });
    out.points.assign(first, last);
    return out;
}

void TelemetrySet::insert(TelemetrySeries series)
{
    validate(series);
    auto [it, inserted] = series_.try_emplace(series.sensor_id, std::move(series));
    if (!inserted) {
        throw ValidationError("duplicate telemetry series for sensor '" + it->first + "'");
    }
}

const TelemetrySeries* TelemetrySet::find(std::string_view sensor_id) const
{
    const auto it = series_.find(sensor_id);
    return it == series_.end() ? nullptr : &it->second;
}

std::optional<std::pair<Timestamp, Timestamp>> TelemetrySet::full_span() const
{
    std::optional<std::pair<Timestamp, Timestamp>> span;
    for (const auto& [id, series] : series_) {
        if (series.points.empty()) {
            continue;
        }
        const Timestamp lo = series.points.front().t;
        const Timestamp hi = series.points.back().t;
        if (!span) {
            span = {lo, hi};
        } else {
            span->first = std::min(span->first, lo);
            span->second = std::max(span->second, hi);
        }
    }
    return span;
}

namespace sensor_ids {

std::string room_return_temp(std::string_view room_id)
{
    return std::string(room_id) + ".return_temp";
}

std::string room_supply_temp(std::string_view room_id)
{
    return std::string(room_id) + ".supply_temp";
}

} // namespace sensor_ids

} // namespace dcaudit
