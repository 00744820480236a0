#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace mcorr {

// Calendar day, counted in days since 1970-01-01.
struct Date {
    std::int32_t days = 0;

    auto operator<=>(const Date&) const = default;
    Date operator+(int n) const { return Date{days + n}; }
    Date operator-(int n) const { return Date{days - n}; }
    int operator-(Date other) const { return days - other.days; }
};

// Instant on a linear second scale (seconds since 1970-01-01T00:00:00).
// Event logs carry wall-clock timestamps; the flat's timezone offset decides
// where its local midnight falls on this scale.
struct Timestamp {
    std::int64_t seconds = 0;

    auto operator<=>(const Timestamp&) const = default;
};

inline constexpr int kSecondsPerDay = 86400;
inline constexpr int kWindowSeconds = 8;
inline constexpr int kWindowsPerDay = kSecondsPerDay / kWindowSeconds;  // 10800

Date make_date(int year, int month, int day);
void civil_from_date(Date d, int& year, int& month, int& day);

// "YYYY-MM-DD"; throws std::invalid_argument with a terse reason.
Date parse_date(const std::string& text);
std::string format_date(Date d);

// "YYYY-MM-DDTHH:MM:SS" with optional ".fff" (truncated) and optional
// "Z" / "+HH:MM" / "-HH:MM" suffix. A suffix shifts the value onto UTC;
// without one the wall clock is taken as-is.
Timestamp parse_timestamp(const std::string& text);
std::string format_timestamp(Timestamp t);

Timestamp timestamp_at(Date d, int second_of_day);

// Calendar day containing t under the given offset from UTC (minutes).
Date local_date(Timestamp t, int tz_offset_min);

// Seconds since the local midnight of local_date(t).
int local_second_of_day(Timestamp t, int tz_offset_min);

}  // namespace mcorr
