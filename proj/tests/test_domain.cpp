#include "dcaudit/domain.hpp"

#include "dcaudit/errors.hpp"
#include "dcaudit/inventory_io.hpp"
#include "dcaudit/telemetry_io.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace dcaudit;
using dcaudit::test::make_series;

TEST_CASE("rfc3339 parsing and formatting")
{
    CHECK(parse_rfc3339("1970-01-01T00:00:00Z").secs == 0);
    CHECK(parse_rfc3339("2026-01-01T00:00:00Z") == make_timestamp(2026, 1, 1));
    CHECK(parse_rfc3339("2026-01-01T01:30:15Z").secs == make_timestamp(2026, 1, 1, 1, 30, 15).secs);
    // offsets shift back to UTC
    CHECK(parse_rfc3339("2026-01-01T01:00:00+01:00") == make_timestamp(2026, 1, 1));
    CHECK(parse_rfc3339("2025-12-31T23:00:00-01:00") == make_timestamp(2026, 1, 1));
    // fractional seconds truncate
    CHECK(parse_rfc3339("2026-01-01T00:00:00.75Z") == make_timestamp(2026, 1, 1));
    CHECK(format_rfc3339(make_timestamp(2026, 1, 7, 13, 5, 9)) == "2026-01-07T13:05:09Z");

    CHECK_THROWS_AS(parse_rfc3339("2026-01-01"), ParseError);
    CHECK_THROWS_AS(parse_rfc3339("2026-01-01T00:00:00"), ParseError);
    CHECK_THROWS_AS(parse_rfc3339("2026-13-01T00:00:00Z"), ParseError);
    CHECK_THROWS_AS(parse_rfc3339("2026-02-30T00:00:00Z"), ParseError);
    CHECK_THROWS_AS(parse_rfc3339("2026-01-01T00:00:00Zjunk"), ParseError);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Timestamp t{static_cast<std::int64_t>(rng() % 4102444800ULL)};   // up to year 2100
        CHECK(parse_rfc3339(format_rfc3339(t)) == t);
    }
}

TEST_CASE("inventory validation catches the named defects")
{
    SUBCASE("valid minimal inventory")
    {
        CHECK_NOTHROW(validate(test::minimal_inventory()));
    }
    SUBCASE("duplicate id across categories")
    {
        Inventory inv = test::minimal_inventory();
        inv.rooms.front().lamps.push_back({"rack-1", BulbType::Led, false, false, 10.0});
        CHECK_THROWS_WITH_AS(validate(inv), doctest::Contains("duplicate id 'rack-1'"),
                             ValidationError);
    }
    SUBCASE("merv rating out of range names the filter")
    {
        Inventory inv = test::minimal_inventory();
        inv.rooms.front().filters.push_back({"filter-9", 25, FilterPurpose::ExternalIntake});
        CHECK_THROWS_WITH_AS(validate(inv), doctest::Contains("filter-9"), ValidationError);
    }
    SUBCASE("dangling aisle neighbor reference")
    {
        Inventory inv = test::minimal_inventory();
        inv.rooms.front().aisles.front().neighbor_ids.push_back("missing");
        CHECK_THROWS_WITH_AS(validate(inv), doctest::Contains("dangling aisle reference"),
                             ValidationError);
    }
    SUBCASE("self neighbor")
    {
        Inventory inv = test::minimal_inventory();
        inv.rooms.front().aisles.front().neighbor_ids.push_back("aisle-1");
        CHECK_THROWS_AS(validate(inv), ValidationError);
    }
    SUBCASE("rated server must draw power")
    {
        Inventory inv = test::minimal_inventory();
        inv.rooms.front().aisles.front().racks.front().servers.push_back(
            test::make_server("srv-1", true, 100.0, 0.0));
        CHECK_THROWS_AS(validate(inv), ValidationError);
    }
}

TEST_CASE("inventory json round trip preserves every field")
{
    Inventory inv = test::minimal_inventory("dc-round");
    Room& room = inv.rooms.front();
    room.filters.push_back({"filter-1", 12, FilterPurpose::ExternalIntake});
    room.lamps.push_back({"lamp-1", BulbType::Incandescent, true, false, 60.0});
    room.hvac_units.push_back({"hvac-1", "hvac-1.power", "hvac-1.load"});
    room.fans.push_back({"fan-1", "fan-1.power", "fan-1.airflow"});
    Server with_sensor = test::make_server("srv-1");
    with_sensor.cpu_utilization_sensor_id = "srv-1.util";
    room.aisles.front().racks.front().servers.push_back(std::move(with_sensor));
    room.aisles.front().racks.front().intake_sensor_ids.push_back("rack-1.intake");
    inv.power_sources.push_back({"solar", PowerSourceKind::Renewable, 123.5});
    inv.captured_at = make_timestamp(2026, 3, 1, 12);

    const std::string text = serialize_inventory(inv);
    const Inventory reloaded = parse_inventory(text);
    CHECK(reloaded == inv);
    // serialization is canonical: a second round trip is byte-identical
    CHECK(serialize_inventory(reloaded) == text);
}

TEST_CASE("load_inventory reports structural counts and errors")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "dcaudit_domain_test_inventory.json";

    SUBCASE("structure preserving load")
    {
        Inventory inv;
        inv.data_center_id = "dc-2x4x8";
        inv.captured_at = make_timestamp(2026, 1, 1);
        int rack_no = 0;
        for (int r = 0; r < 2; ++r) {
            Room room;
            room.id = "room-" + std::to_string(r);
            for (int a = 0; a < 2; ++a) {
                Aisle aisle = test::make_aisle("aisle-" + std::to_string(r) + std::to_string(a),
                                               ThermalRole::Cold, {});
                for (int k = 0; k < 2; ++k) {
                    Rack rack;
                    rack.id = "rack-" + std::to_string(rack_no++);
                    aisle.racks.push_back(std::move(rack));
                }
                room.aisles.push_back(std::move(aisle));
            }
            inv.rooms.push_back(std::move(room));
        }
        write_inventory(inv, path);
        const Inventory loaded = load_inventory(path);
        CHECK(loaded.rooms.size() == 2);
        std::size_t aisles = 0;
        std::size_t racks = 0;
        for (const Room& room : loaded.rooms) {
            aisles += room.aisles.size();
            for (const Aisle& aisle : room.aisles) {
                racks += aisle.racks.size();
            }
        }
        CHECK(aisles == 4);
        CHECK(racks == 8);
    }
    SUBCASE("malformed json")
    {
        std::ofstream(path) << "{ not json";
        CHECK_THROWS_AS(load_inventory(path), ParseError);
    }
    SUBCASE("missing field context")
    {
        std::ofstream(path) << R"({"data_center_id": "x", "captured_at": "2026-01-01T00:00:00Z",
                                   "rooms": [{"id": "r"}], "power_sources": []})";
        CHECK_THROWS_WITH_AS(load_inventory(path), doctest::Contains("aisles"), ParseError);
    }
    SUBCASE("missing file")
    {
        CHECK_THROWS_AS(load_inventory(dir / "does_not_exist.json"), IoError);
    }
    std::filesystem::remove(path);
}

TEST_CASE("telemetry csv parsing")
{
    SUBCASE("rows sort into one series per sensor")
    {
        const std::string csv = "timestamp,sensor_id,kind,value,unit\n"
                                "2026-01-01T02:00:00Z,amb1,temperature_f,71,f\n"
                                "2026-01-01T00:00:00Z,amb1,temperature_f,70,f\n"
                                "2026-01-01T01:00:00Z,amb1,temperature_f,72,f\n";
        const TelemetrySet set = parse_telemetry_csv(csv);
        const TelemetrySeries* s = set.find("amb1");
        REQUIRE(s != nullptr);
        REQUIRE(s->points.size() == 3);
        CHECK(s->points[0].value == 70.0);
        CHECK(s->points[1].value == 72.0);
        CHECK(s->points[2].value == 71.0);
        CHECK(s->points[0].t < s->points[1].t);
        CHECK(s->points[1].t < s->points[2].t);
    }
    SUBCASE("interleaved sensors split cleanly")
    {
        const std::string csv = "timestamp,sensor_id,kind,value,unit\n"
                                "2026-01-01T01:00:00Z,b,power_kw,2,kw\n"
                                "2026-01-01T00:00:00Z,a,temperature_f,70,f\n"
                                "2026-01-01T00:00:00Z,b,power_kw,1,kw\n"
                                "2026-01-01T01:00:00Z,a,temperature_f,71,f\n";
        const TelemetrySet set = parse_telemetry_csv(csv);
        CHECK(set.size() == 2);
        CHECK(set.find("a")->points.size() == 2);
        CHECK(set.find("b")->points.size() == 2);
        CHECK(set.find("b")->points.front().value == 1.0);
    }
    SUBCASE("utilization outside [0,100] is rejected")
    {
        const std::string csv = "timestamp,sensor_id,kind,value,unit\n"
                                "2026-01-01T00:00:00Z,u,cpu_utilization_pct,140,pct\n";
        CHECK_THROWS_AS(parse_telemetry_csv(csv), ValidationError);
    }
    SUBCASE("celsius converts at ingestion")
    {
        const std::string csv = "timestamp,sensor_id,kind,value,unit\n"
                                "2026-01-01T00:00:00Z,amb,temperature_f,0,c\n"
                                "2026-01-01T01:00:00Z,amb,temperature_f,100,c\n";
        const TelemetrySet set = parse_telemetry_csv(csv);
        CHECK(set.find("amb")->points[0].value == 32.0);
        CHECK(set.find("amb")->points[1].value == 212.0);
    }
    SUBCASE("unit must match the kind")
    {
        const std::string csv = "timestamp,sensor_id,kind,value,unit\n"
                                "2026-01-01T00:00:00Z,p,power_w,5,kw\n";
        CHECK_THROWS_AS(parse_telemetry_csv(csv), ValidationError);
    }
    SUBCASE("duplicate timestamps for one sensor are non-monotonic")
    {
        const std::string csv = "timestamp,sensor_id,kind,value,unit\n"
                                "2026-01-01T00:00:00Z,a,power_kw,1,kw\n"
                                "2026-01-01T00:00:00Z,a,power_kw,2,kw\n";
        CHECK_THROWS_WITH_AS(parse_telemetry_csv(csv), doctest::Contains("non-monotonic"),
                             ValidationError);
    }
    SUBCASE("a sensor cannot change kind")
    {
        const std::string csv = "timestamp,sensor_id,kind,value,unit\n"
                                "2026-01-01T00:00:00Z,x,power_kw,1,kw\n"
                                "2026-01-01T01:00:00Z,x,power_w,1,w\n";
        CHECK_THROWS_AS(parse_telemetry_csv(csv), ValidationError);
    }
    SUBCASE("bad header, bad value, bad kind")
    {
        CHECK_THROWS_AS(parse_telemetry_csv("time,id,kind,value,unit\n"), ParseError);
        CHECK_THROWS_AS(parse_telemetry_csv("timestamp,sensor_id,kind,value,unit\n"
                                            "2026-01-01T00:00:00Z,a,power_kw,oops,kw\n"),
                        ParseError);
        CHECK_THROWS_AS(parse_telemetry_csv("timestamp,sensor_id,kind,value,unit\n"
                                            "2026-01-01T00:00:00Z,a,power_mw,1,mw\n"),
                        ParseError);
        CHECK_THROWS_AS(parse_telemetry_csv("timestamp,sensor_id,kind,value,unit\n"
                                            "2026-01-01T00:00:00Z,a,power_kw,nan,kw\n"),
                        ValidationError);
    }
    SUBCASE("round trip")
    {
        TelemetrySet set;
        set.insert(make_series("a", SensorKind::PowerKw, {1.5, 2.25, 3.125}));
        set.insert(make_series("b", SensorKind::TemperatureF, {70.1, 70.2}));
        const std::string csv = serialize_telemetry_csv(set);
        CHECK(parse_telemetry_csv(csv) == set);
    }
}

TEST_CASE("window selects the closed interval")
{
    const TelemetrySeries s = make_series("x", SensorKind::PowerKw, {1, 2, 3, 4}, 0, 100);

    SUBCASE("identity")
    {
        CHECK(window(s, Timestamp{0}, Timestamp{300}) == s);
        CHECK(window(s, Timestamp{-50}, Timestamp{1000}) == s);
    }
    SUBCASE("empty")
    {
        CHECK(window(s, Timestamp{1000}, Timestamp{2000}).points.empty());
    }
    SUBCASE("boundaries included")
    {
        const TelemetrySeries w = window(s, Timestamp{100}, Timestamp{200});
        REQUIRE(w.points.size() == 2);
        CHECK(w.points.front().value == 2.0);
        CHECK(w.points.back().value == 3.0);
    }
    SUBCASE("invalid window")
    {
        CHECK_THROWS_AS(window(s, Timestamp{10}, Timestamp{0}), InvalidWindow);
    }
    SUBCASE("window never leaks points outside the range")
    {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 300; ++i) {
            TelemetrySeries series;
            series.sensor_id = "r";
            series.kind = SensorKind::PowerKw;
            std::int64_t t = static_cast<std::int64_t>(rng() % 100);
            const int n = static_cast<int>(rng() % 20);
            for (int k = 0; k < n; ++k) {
                series.points.push_back({Timestamp{t}, 1.0});
                t += 1 + static_cast<std::int64_t>(rng() % 50);
            }
            const auto a = static_cast<std::int64_t>(rng() % 1200);
            const auto b = a + static_cast<std::int64_t>(rng() % 600);
            const TelemetrySeries w = window(series, Timestamp{a}, Timestamp{b});
            CHECK(w.points.size() <= series.points.size());
            for (const TelemetryPoint& p : w.points) {
                CHECK(p.t.secs >= a);
                CHECK(p.t.secs <= b);
            }
        }
    }
}

TEST_CASE("telemetry set basics")
{
    TelemetrySet set;
    set.insert(make_series("a", SensorKind::PowerKw, {1.0}, 100));
    set.insert(make_series("b", SensorKind::PowerKw, {1.0, 2.0}, 50));
    CHECK_THROWS_AS(set.insert(make_series("a", SensorKind::PowerKw, {2.0})), ValidationError);
    CHECK(set.contains("a"));
    CHECK_FALSE(set.contains("zzz"));
    const auto span = set.full_span();
    REQUIRE(span.has_value());
    CHECK(span->first.secs == 50);
    CHECK(span->second.secs == 3650);
    CHECK_FALSE(TelemetrySet{}.full_span().has_value());
}
