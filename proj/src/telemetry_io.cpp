#include "dcaudit/telemetry_io.hpp"

#include "dcaudit/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace dcaudit {

namespace {

std::string_view canonical_unit(SensorKind kind)
{
    switch (kind) {
    case SensorKind::TemperatureF: return "f";
    case SensorKind::PowerW: return "w";
    case SensorKind::PowerKw: return "kw";
    case SensorKind::AirflowCfm: return "cfm";
    case SensorKind::CoolingLoadTons: return "tons";
    case SensorKind::EnergyKwhAnnual: return "kwh";
    case SensorKind::CpuUtilizationPct: return "pct";
    }
    return "";
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

double parse_value(std::string_view text, std::size_t line_no)
{
    const std::string s{text};
    double value = 0.0;
    const char* begin = s.c_str();
    char* end = nullptr;
    value = std::strtod(begin, &end);
    if (end == begin || end != begin + s.size()) {
        throw ParseError("telemetry line " + std::to_string(line_no) + ": bad value '" + s + "'");
    }
    if (!std::isfinite(value)) {
        throw ValidationError("telemetry line " + std::to_string(line_no)
                              + ": non-finite value '" + s + "'");
    }
    return value;
}

} // namespace

TelemetrySet parse_telemetry_csv(const std::string& text)
{
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(stream, line)) {
        throw ParseError("telemetry: empty file");
    }
    ++line_no;
    {
        const auto header = split_fields(line);
        const std::vector<std::string_view> expected = {"timestamp", "sensor_id", "kind", "value",
                                                        "unit"};
        if (std::vector<std::string_view>(header.begin(), header.end()) != expected) {
            throw ParseError("telemetry: bad header '" + line
                             + "' (want timestamp,sensor_id,kind,value,unit)");
        }
    }

    struct Builder {
        SensorKind kind;
        std::vector<TelemetryPoint> points;
    };
    std::map<std::string, Builder> builders;

    while (std::getline(stream, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 5) {
            throw ParseError("telemetry line " + std::to_string(line_no) + ": expected 5 fields, got "
                             + std::to_string(fields.size()));
        }
        const Timestamp t = parse_rfc3339(fields[0]);
        const std::string sensor_id{fields[1]};
        if (sensor_id.empty()) {
            throw ParseError("telemetry line " + std::to_string(line_no) + ": empty sensor_id");
        }
        const auto kind = sensor_kind_from_string(fields[2]);
        if (!kind) {
            throw ParseError("telemetry line " + std::to_string(line_no) + ": unknown kind '"
                             + std::string(fields[2]) + "'");
        }
        double value = parse_value(fields[3], line_no);
        const std::string unit = lower(fields[4]);
        if (*kind == SensorKind::TemperatureF) {
            if (unit == "c") {
                value = value * 9.0 / 5.0 + 32.0;  // store everything in °F
            } else if (unit != "f") {
                throw ValidationError("telemetry line " + std::to_string(line_no) + ": unit '" + unit
                                      + "' does not match kind temperature_f");
            }
        } else {
            const std::string_view want = canonical_unit(*kind);
            const bool pct_alias = *kind == SensorKind::CpuUtilizationPct && unit == "%";
            if (unit != want && !pct_alias) {
                throw ValidationError("telemetry line " + std::to_string(line_no) + ": unit '" + unit
                                      + "' does not match kind " + std::string(to_string(*kind)));
            }
        }

        auto [it, inserted] = builders.try_emplace(sensor_id, Builder{*kind, {}});
        if (!inserted && it->second.kind != *kind) {
            throw ValidationError("telemetry line " + std::to_string(line_no) + ": sensor '"
                                  + sensor_id + "' changes kind from "
                                  + std::string(to_string(it->second.kind)) + " to "
                                  + std::string(to_string(*kind)));
        }
        it->second.points.push_back({t, value});
    }

    TelemetrySet set;
    for (auto& [id, builder] : builders) {
        TelemetrySeries series;
        series.sensor_id = id;
        series.kind = builder.kind;
        std::sort(builder.points.begin(), builder.points.end(),
                  [](const TelemetryPoint& a, const TelemetryPoint& b) { return a.t < b.t; });
        series.points = std::move(builder.points);
        set.insert(std::move(series));  // validates: strict monotonicity, ranges
    }
    return set;
}

TelemetrySet load_telemetry(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open telemetry file '" + path.string() + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_telemetry_csv(text);
}

std::string serialize_telemetry_csv(const TelemetrySet& telemetry)
{
    std::string out = "timestamp,sensor_id,kind,value,unit\n";
    char buf[64];
    for (const auto& [id, series] : telemetry) {
        for (const TelemetryPoint& p : series.points) {
            const auto res = std::to_chars(buf, buf + sizeof buf, p.value);
            out += format_rfc3339(p.t);
            out += ',';
            out += id;
            out += ',';
            out += to_string(series.kind);
            out += ',';
            out.append(buf, res.ptr);
            out += ',';
            out += canonical_unit(series.kind);
            out += '\n';
        }
    }
    return out;
}

void write_telemetry(const TelemetrySet& telemetry, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write telemetry file '" + path.string() + "'");
    }
    out << serialize_telemetry_csv(telemetry);
    if (!out) {
        throw IoError("error writing telemetry file '" + path.string() + "'");
    }
}

} // namespace dcaudit
