#include "dcaudit/inventory_io.hpp"

#include "dcaudit/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace dcaudit {

namespace {

using nlohmann::json;

std::string_view to_string(ThermalRole role)
{
    switch (role) {
    case ThermalRole::Hot: return "hot";
    case ThermalRole::Cold: return "cold";
    case ThermalRole::Unassigned: return "unassigned";
    }
    return "unassigned";
}

ThermalRole thermal_role_from(const std::string& text, const std::string& where)
{
    if (text == "hot") return ThermalRole::Hot;
    if (text == "cold") return ThermalRole::Cold;
    if (text == "unassigned") return ThermalRole::Unassigned;
    throw ParseError(where + ": unknown thermal_role '" + text + "'");
}

std::string_view to_string(CablingState cabling)
{
    switch (cabling) {
    case CablingState::Structured: return "structured";
    case CablingState::Unstructured: return "unstructured";
    case CablingState::Unknown: return "unknown";
    }
    return "unknown";
}

CablingState cabling_from(const std::string& text, const std::string& where)
{
    if (text == "structured") return CablingState::Structured;
    if (text == "unstructured") return CablingState::Unstructured;
    if (text == "unknown") return CablingState::Unknown;
    throw ParseError(where + ": unknown cabling '" + text + "'");
}

std::string_view to_string(BulbType bulb)
{
    switch (bulb) {
    case BulbType::Led: return "led";
    case BulbType::Incandescent: return "incandescent";
    case BulbType::Fluorescent: return "fluorescent";
    case BulbType::Other: return "other";
    }
    return "other";
}

BulbType bulb_from(const std::string& text, const std::string& where)
{
    if (text == "led") return BulbType::Led;
    if (text == "incandescent") return BulbType::Incandescent;
    if (text == "fluorescent") return BulbType::Fluorescent;
    if (text == "other") return BulbType::Other;
    throw ParseError(where + ": unknown bulb '" + text + "'");
}

std::string_view to_string(FilterPurpose purpose)
{
    return purpose == FilterPurpose::ExternalIntake ? "external_intake" : "internal_recirculation";
}

FilterPurpose purpose_from(const std::string& text, const std::string& where)
{
    if (text == "external_intake") return FilterPurpose::ExternalIntake;
    if (text == "internal_recirculation") return FilterPurpose::InternalRecirculation;
    throw ParseError(where + ": unknown filter purpose '" + text + "'");
}

std::string_view to_string(PowerSourceKind kind)
{
    return kind == PowerSourceKind::Renewable ? "renewable" : "non_renewable";
}

PowerSourceKind power_kind_from(const std::string& text, const std::string& where)
{
    if (text == "renewable") return PowerSourceKind::Renewable;
    if (text == "non_renewable") return PowerSourceKind::NonRenewable;
    throw ParseError(where + ": unknown power source kind '" + text + "'");
}

// -- json -> domain ---------------------------------------------------------

template <typename T>
T get_field(const json& obj, const char* key, const std::string& where)
{
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ParseError(where + ": field '" + key + "' has the wrong type");
    }
}

Server server_from(const json& j, const std::string& where)
{
    Server s;
    s.id = get_field<std::string>(j, "id", where);
    const std::string at = where + " server '" + s.id + "'";
    s.in_use = get_field<bool>(j, "in_use", at);
    s.rated_gflops = get_field<double>(j, "rated_gflops", at);
    s.measured_power_w = get_field<double>(j, "measured_power_w", at);
    if (j.contains("cpu_utilization_sensor_id") && !j.at("cpu_utilization_sensor_id").is_null()) {
        s.cpu_utilization_sensor_id = get_field<std::string>(j, "cpu_utilization_sensor_id", at);
    }
    return s;
}

Rack rack_from(const json& j, const std::string& where)
{
    Rack r;
    r.id = get_field<std::string>(j, "id", where);
    const std::string at = where + " rack '" + r.id + "'";
    r.cabling = cabling_from(get_field<std::string>(j, "cabling", at), at);
    r.intake_sensor_ids = get_field<std::vector<std::string>>(j, "intake_sensor_ids", at);
    r.exhaust_sensor_ids = get_field<std::vector<std::string>>(j, "exhaust_sensor_ids", at);
    for (const json& sj : get_field<json>(j, "servers", at)) {
        r.servers.push_back(server_from(sj, at));
    }
    return r;
}

Aisle aisle_from(const json& j, const std::string& where)
{
    Aisle a;
    a.id = get_field<std::string>(j, "id", where);
    const std::string at = where + " aisle '" + a.id + "'";
    a.thermal_role = thermal_role_from(get_field<std::string>(j, "thermal_role", at), at);
    a.barrier_installed = get_field<bool>(j, "barrier_installed", at);
    a.neighbor_ids = get_field<std::vector<std::string>>(j, "neighbor_ids", at);
    for (const json& rj : get_field<json>(j, "racks", at)) {
        a.racks.push_back(rack_from(rj, at));
    }
    return a;
}

Room room_from(const json& j)
{
    Room room;
    room.id = get_field<std::string>(j, "id", "room");
    const std::string at = "room '" + room.id + "'";
    for (const json& aj : get_field<json>(j, "aisles", at)) {
        room.aisles.push_back(aisle_from(aj, at));
    }
    for (const json& fj : get_field<json>(j, "filters", at)) {
        AirFilter f;
        f.id = get_field<std::string>(fj, "id", at + " filter");
        f.merv_rating = get_field<int>(fj, "merv_rating", at + " filter '" + f.id + "'");
        f.purpose = purpose_from(get_field<std::string>(fj, "purpose", at + " filter '" + f.id + "'"),
                                 at + " filter '" + f.id + "'");
        room.filters.push_back(std::move(f));
    }
    for (const json& lj : get_field<json>(j, "lamps", at)) {
        Lamp l;
        l.id = get_field<std::string>(lj, "id", at + " lamp");
        const std::string lat = at + " lamp '" + l.id + "'";
        l.bulb = bulb_from(get_field<std::string>(lj, "bulb", lat), lat);
        l.dimmable = get_field<bool>(lj, "dimmable", lat);
        l.occupancy_sensor = get_field<bool>(lj, "occupancy_sensor", lat);
        l.rated_power_w = get_field<double>(lj, "rated_power_w", lat);
        room.lamps.push_back(std::move(l));
    }
    for (const json& hj : get_field<json>(j, "hvac_units", at)) {
        HvacUnit h;
        h.id = get_field<std::string>(hj, "id", at + " hvac unit");
        const std::string hat = at + " hvac unit '" + h.id + "'";
        h.power_sensor_id = get_field<std::string>(hj, "power_sensor_id", hat);
        h.load_sensor_id = get_field<std::string>(hj, "load_sensor_id", hat);
        room.hvac_units.push_back(std::move(h));
    }
    for (const json& fj : get_field<json>(j, "fans", at)) {
        Fan f;
        f.id = get_field<std::string>(fj, "id", at + " fan");
        const std::string fat = at + " fan '" + f.id + "'";
        f.power_sensor_id = get_field<std::string>(fj, "power_sensor_id", fat);
        f.airflow_sensor_id = get_field<std::string>(fj, "airflow_sensor_id", fat);
        room.fans.push_back(std::move(f));
    }
    return room;
}

// -- domain -> json ---------------------------------------------------------

json to_json(const Server& s)
{
    json j{{"id", s.id},
           {"in_use", s.in_use},
           {"rated_gflops", s.rated_gflops},
           {"measured_power_w", s.measured_power_w}};
    if (s.cpu_utilization_sensor_id) {
        j["cpu_utilization_sensor_id"] = *s.cpu_utilization_sensor_id;
    }
    return j;
}

json to_json(const Rack& r)
{
    json servers = json::array();
    for (const Server& s : r.servers) {
        servers.push_back(to_json(s));
    }
    return {{"id", r.id},
            {"cabling", std::string(to_string(r.cabling))},
            {"intake_sensor_ids", r.intake_sensor_ids},
            {"exhaust_sensor_ids", r.exhaust_sensor_ids},
            {"servers", std::move(servers)}};
}

json to_json(const Aisle& a)
{
    json racks = json::array();
    for (const Rack& r : a.racks) {
        racks.push_back(to_json(r));
    }
    return {{"id", a.id},
            {"thermal_role", std::string(to_string(a.thermal_role))},
            {"barrier_installed", a.barrier_installed},
            {"neighbor_ids", a.neighbor_ids},
            {"racks", std::move(racks)}};
}

json to_json(const Room& room)
{
    json aisles = json::array();
    for (const Aisle& a : room.aisles) {
        aisles.push_back(to_json(a));
    }
    json filters = json::array();
    for (const AirFilter& f : room.filters) {
        filters.push_back({{"id", f.id},
                           {"merv_rating", f.merv_rating},
                           {"purpose", std::string(to_string(f.purpose))}});
    }
    json lamps = json::array();
    for (const Lamp& l : room.lamps) {
        lamps.push_back({{"id", l.id},
                         {"bulb", std::string(to_string(l.bulb))},
                         {"dimmable", l.dimmable},
                         {"occupancy_sensor", l.occupancy_sensor},
                         {"rated_power_w", l.rated_power_w}});
    }
    json hvac = json::array();
    for (const HvacUnit& h : room.hvac_units) {
        hvac.push_back({{"id", h.id},
                        {"power_sensor_id", h.power_sensor_id},
                        {"load_sensor_id", h.load_sensor_id}});
    }
    json fans = json::array();
    for (const Fan& f : room.fans) {
        fans.push_back({{"id", f.id},
                        {"power_sensor_id", f.power_sensor_id},
                        {"airflow_sensor_id", f.airflow_sensor_id}});
    }
    return {{"id", room.id},
            {"aisles", std::move(aisles)},
            {"filters", std::move(filters)},
            {"lamps", std::move(lamps)},
            {"hvac_units", std::move(hvac)},
            {"fans", std::move(fans)}};
}

} // namespace

Inventory parse_inventory(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("inventory: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("inventory: top-level JSON value must be an object");
    }

    Inventory inv;
    inv.data_center_id = get_field<std::string>(doc, "data_center_id", "inventory");
    inv.captured_at = parse_rfc3339(get_field<std::string>(doc, "captured_at", "inventory"));
    for (const json& rj : get_field<json>(doc, "rooms", "inventory")) {
        inv.rooms.push_back(room_from(rj));
    }
    for (const json& pj : get_field<json>(doc, "power_sources", "inventory")) {
        PowerSource p;
        p.id = get_field<std::string>(pj, "id", "power source");
        const std::string at = "power source '" + p.id + "'";
        p.kind = power_kind_from(get_field<std::string>(pj, "kind", at), at);
        p.energy_supplied_kwh = get_field<double>(pj, "energy_supplied_kwh", at);
        inv.power_sources.push_back(std::move(p));
    }

    validate(inv);
    return inv;
}

Inventory load_inventory(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open inventory file '" + path.string() + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_inventory(text);
}

std::string serialize_inventory(const Inventory& inventory)
{
    json rooms = json::array();
    for (const Room& room : inventory.rooms) {
        rooms.push_back(to_json(room));
    }
    json sources = json::array();
    for (const PowerSource& p : inventory.power_sources) {
        sources.push_back({{"id", p.id},
                           {"kind", std::string(to_string(p.kind))},
                           {"energy_supplied_kwh", p.energy_supplied_kwh}});
    }
    const json doc{{"data_center_id", inventory.data_center_id},
                   {"captured_at", format_rfc3339(inventory.captured_at)},
                   {"rooms", std::move(rooms)},
                   {"power_sources", std::move(sources)}};
    return doc.dump(2) + "\n";
}

void write_inventory(const Inventory& inventory, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write inventory file '" + path.string() + "'");
    }
    out << serialize_inventory(inventory);
    if (!out) {
        throw IoError("error writing inventory file '" + path.string() + "'");
    }
}

} // namespace dcaudit
