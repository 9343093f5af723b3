#include "dcaudit/time.hpp"

#include "dcaudit/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>

namespace dcaudit {

namespace {

// civil-from-days, inverse of days_from_civil.
struct CivilDate {
    std::int64_t year;
    unsigned month;
    unsigned day;
};

CivilDate civil_from_days(std::int64_t z)
{
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), m, d};
}

unsigned parse_fixed_uint(std::string_view s, std::size_t pos, std::size_t len,
                          std::string_view what, std::string_view full)
{
    if (pos + len > s.size()) {
        throw ParseError("timestamp '" + std::string(full) + "': truncated " + std::string(what));
    }
    unsigned value = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const char c = s[pos + i];
        if (c < '0' || c > '9') {
            throw ParseError("timestamp '" + std::string(full) + "': non-digit in " + std::string(what));
        }
        value = value * 10 + static_cast<unsigned>(c - '0');
    }
    return value;
}

bool is_leap(std::int64_t y)
{
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

unsigned days_in_month(std::int64_t y, unsigned m)
{
    static constexpr std::array<unsigned, 12> lengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) {
        return 29;
    }
    return lengths[m - 1];
}

} // namespace

Timestamp parse_rfc3339(std::string_view text)
{
    const std::string_view s = text;
    const unsigned year = parse_fixed_uint(s, 0, 4, "year", text);
    auto expect = [&](std::size_t pos, char c) {
        if (pos >= s.size() || s[pos] != c) {
            throw ParseError("timestamp '" + std::string(text) + "': expected '" + c
                             + "' at position " + std::to_string(pos));
        }
    };
    expect(4, '-');
    const unsigned month = parse_fixed_uint(s, 5, 2, "month", text);
    expect(7, '-');
    const unsigned day = parse_fixed_uint(s, 8, 2, "day", text);
    if (s.size() <= 10 || (s[10] != 'T' && s[10] != 't' && s[10] != ' ')) {
        throw ParseError("timestamp '" + std::string(text) + "': expected 'T' separator");
    }
    const unsigned hour = parse_fixed_uint(s, 11, 2, "hour", text);
    expect(13, ':');
    const unsigned minute = parse_fixed_uint(s, 14, 2, "minute", text);
    expect(16, ':');
    const unsigned second = parse_fixed_uint(s, 17, 2, "second", text);

    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)
        || hour > 23 || minute > 59 || second > 60) {
        throw ParseError("timestamp '" + std::string(text) + "': field out of range");
    }

    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos; // fractional seconds: accepted, truncated
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
            throw ParseError("timestamp '" + std::string(text) + "': empty fractional part");
        }
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
    }

    std::int64_t offset = 0;
    if (pos >= s.size()) {
        throw ParseError("timestamp '" + std::string(text) + "': missing UTC designator or offset");
    }
    if (s[pos] == 'Z' || s[pos] == 'z') {
        ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
        const int sign = s[pos] == '+' ? 1 : -1;
        const unsigned oh = parse_fixed_uint(s, pos + 1, 2, "offset hour", text);
        expect(pos + 3, ':');
        const unsigned om = parse_fixed_uint(s, pos + 4, 2, "offset minute", text);
        if (oh > 23 || om > 59) {
            throw ParseError("timestamp '" + std::string(text) + "': offset out of range");
        }
        offset = sign * (static_cast<std::int64_t>(oh) * 3600 + om * 60);
        pos += 6;
    } else {
        throw ParseError("timestamp '" + std::string(text) + "': missing UTC designator or offset");
    }
    if (pos != s.size()) {
        throw ParseError("timestamp '" + std::string(text) + "': trailing characters");
    }

    const std::int64_t days = days_from_civil(year, month, day);
    // second == 60 (leap second) folds into the next minute.
    return Timestamp{days * 86400 + hour * 3600 + minute * 60 + second - offset};
}

std::string format_rfc3339(Timestamp t)
{
    std::int64_t days = t.secs / 86400;
    std::int64_t rem = t.secs % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    const CivilDate date = civil_from_days(days);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(date.year), date.month, date.day,
                  static_cast<long long>(rem / 3600),
                  static_cast<long long>(rem / 60 % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

Timestamp now_utc()
{
    const auto now = std::chrono::system_clock::now();
    return Timestamp{std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()};
}

} // namespace dcaudit
