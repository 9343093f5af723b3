#pragma once

// Shared builders for hand-rolled audit scenarios.

#include "dcaudit/domain.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace dcaudit::test {

inline TelemetrySeries make_series(std::string sensor_id, SensorKind kind,
                                   std::initializer_list<double> values,
                                   std::int64_t start = 0, std::int64_t step = 3600)
{
    TelemetrySeries s;
    s.sensor_id = std::move(sensor_id);
    s.kind = kind;
    std::int64_t t = start;
    for (const double v : values) {
        s.points.push_back({Timestamp{t}, v});
        t += step;
    }
    return s;
}

inline TelemetrySeries constant_series(std::string sensor_id, SensorKind kind, double value,
                                       std::size_t count, std::int64_t start = 0,
                                       std::int64_t step = 3600)
{
    TelemetrySeries s;
    s.sensor_id = std::move(sensor_id);
    s.kind = kind;
    for (std::size_t i = 0; i < count; ++i) {
        s.points.push_back({Timestamp{start + static_cast<std::int64_t>(i) * step}, value});
    }
    return s;
}

inline Aisle make_aisle(std::string id, ThermalRole role, std::vector<std::string> neighbors,
                        bool barrier = true)
{
    Aisle a;
    a.id = std::move(id);
    a.thermal_role = role;
    a.neighbor_ids = std::move(neighbors);
    a.barrier_installed = barrier;
    return a;
}

inline Server make_server(std::string id, bool in_use = true, double gflops = 8000.0,
                          double power_w = 400.0)
{
    Server s;
    s.id = std::move(id);
    s.in_use = in_use;
    s.rated_gflops = gflops;
    s.measured_power_w = power_w;
    return s;
}

/// One room, one aisle, one rack skeleton; tests add what they need.
inline Inventory minimal_inventory(std::string dc_id = "dc-test")
{
    Inventory inv;
    inv.data_center_id = std::move(dc_id);
    inv.captured_at = Timestamp{0};
    Room room;
    room.id = "room-1";
    Aisle aisle = make_aisle("aisle-1", ThermalRole::Hot, {});
    Rack rack;
    rack.id = "rack-1";
    rack.cabling = CablingState::Structured;
    aisle.racks.push_back(std::move(rack));
    room.aisles.push_back(std::move(aisle));
    inv.rooms.push_back(std::move(room));
    return inv;
}

} // namespace dcaudit::test
