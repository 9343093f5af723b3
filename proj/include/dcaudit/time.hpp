#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dcaudit {

/// A UTC instant with second resolution. All file formats carry RFC 3339
/// strings; internally everything is seconds since the Unix epoch.
struct Timestamp {
    std::int64_t secs = 0;

    auto operator<=>(const Timestamp&) const = default;
};

/// Days-from-civil (proleptic Gregorian), valid for the full int range.
constexpr std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d)
{
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

constexpr Timestamp make_timestamp(int year, unsigned month, unsigned day,
                                   unsigned hour = 0, unsigned minute = 0, unsigned second = 0)
{
    return Timestamp{days_from_civil(year, month, day) * 86400
                     + hour * 3600 + minute * 60 + second};
}

/// Parses an RFC 3339 date-time ("2026-01-07T13:00:00Z", offsets allowed,
/// fractional seconds truncated). Throws ParseError on anything else.
Timestamp parse_rfc3339(std::string_view text);

/// Formats as "YYYY-MM-DDThh:mm:ssZ".
std::string format_rfc3339(Timestamp t);

/// Current wall-clock time, truncated to seconds.
Timestamp now_utc();

} // namespace dcaudit
