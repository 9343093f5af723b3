#pragma once

#include "dcaudit/domain.hpp"

#include <filesystem>
#include <string>

namespace dcaudit {

/// Loads sensor readings from CSV with header
/// `timestamp,sensor_id,kind,value,unit`. Rows may be unordered and
/// interleaved across sensors; the result holds one sorted series per
/// sensor id. Units are verified against the kind; Celsius temperatures
/// are converted to Fahrenheit at ingestion.
TelemetrySet load_telemetry(const std::filesystem::path& path);

TelemetrySet parse_telemetry_csv(const std::string& text);

/// Canonical CSV rendering (series in id order, points in time order).
std::string serialize_telemetry_csv(const TelemetrySet& telemetry);

void write_telemetry(const TelemetrySet& telemetry, const std::filesystem::path& path);

} // namespace dcaudit
