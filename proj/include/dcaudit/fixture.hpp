#pragma once

#include "dcaudit/domain.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace dcaudit {

/// Knobs for the synthetic data-center generator. compliance_rates maps an
/// audit item id to the fraction of its assets (or readings) that should
/// satisfy the item's predicate; unlisted items default to fully compliant.
/// Counts are realized with floor rounding, so the audited fraction matches
/// the request exactly where the asset count permits.
struct FixtureProfile {
    std::uint64_t seed = 1;
    int racks = 8;
    int aisles = 4;
    int servers_per_rack = 2;
    int lamps = 10;
    int filters = 8;
    int fans = 4;
    int hvac_units = 2;
    double target_pue = 1.4;
    double ambient_mean_f = 75.0;
    double ambient_jitter_f = 2.0;
    std::map<std::string, double> compliance_rates;
    Timestamp window_start = make_timestamp(2026, 1, 1);
    Timestamp window_end = make_timestamp(2026, 1, 1, 23);
    std::int64_t step_seconds = 3600;
};

struct Fixture {
    Inventory inventory;
    TelemetrySet telemetry;
    std::string prng = "mt19937-64";  // recorded so fixtures stay reproducible
};

/// Deterministic for a given seed; the output always passes inventory and
/// telemetry validation, and the facility/IT power series are built so the
/// window-summed PUE equals target_pue to within float rounding.
/// Throws InfeasibleProfile on bad counts, rates outside [0, 1],
/// target_pue < 1, or rates requested for items the generator cannot steer.
Fixture generate(const FixtureProfile& profile);

/// JSON description of the profile (including the PRNG name), written next
/// to generated fixtures so they can be reproduced.
std::string profile_json(const FixtureProfile& profile);

} // namespace dcaudit
