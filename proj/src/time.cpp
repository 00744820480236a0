#include "mcorr/time.hpp"

#include <cstdio>
#include <stdexcept>

namespace mcorr {

namespace {

// Howard Hinnant's civil calendar algorithms.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = yoe + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

int days_in_month(int y, int m) {
    static const int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

int parse_fixed_int(const std::string& text, size_t pos, size_t len, const char* what) {
    if (pos + len > text.size()) throw std::invalid_argument(std::string("truncated ") + what);
    int v = 0;
    for (size_t i = pos; i < pos + len; ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument(std::string("invalid ") + what);
        v = v * 10 + (c - '0');
    }
    return v;
}

void expect_char(const std::string& text, size_t pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw std::invalid_argument("malformed date/time");
}

}  // namespace

Date make_date(int year, int month, int day) {
    if (month < 1 || month > 12) throw std::invalid_argument("invalid month");
    if (day < 1 || day > days_in_month(year, month)) throw std::invalid_argument("invalid day");
    return Date{static_cast<std::int32_t>(days_from_civil(year, month, day))};
}

void civil_from_date(Date d, int& year, int& month, int& day) {
    civil_from_days(d.days, year, month, day);
}

Date parse_date(const std::string& text) {
    if (text.size() < 10) throw std::invalid_argument("malformed date");
    int y = parse_fixed_int(text, 0, 4, "year");
    expect_char(text, 4, '-');
    int m = parse_fixed_int(text, 5, 2, "month");
    expect_char(text, 7, '-');
    int d = parse_fixed_int(text, 8, 2, "day");
    if (text.size() != 10) throw std::invalid_argument("malformed date");
    return make_date(y, m, d);
}

std::string format_date(Date d) {
    int y, m, day;
    civil_from_days(d.days, y, m, day);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, day);
    return buf;
}

Timestamp parse_timestamp(const std::string& text) {
    if (text.size() < 19) throw std::invalid_argument("malformed timestamp");
    int y = parse_fixed_int(text, 0, 4, "year");
    expect_char(text, 4, '-');
    int mo = parse_fixed_int(text, 5, 2, "month");
    expect_char(text, 7, '-');
    int d = parse_fixed_int(text, 8, 2, "day");
    if (text[10] != 'T' && text[10] != ' ') throw std::invalid_argument("malformed timestamp");
    int h = parse_fixed_int(text, 11, 2, "hour");
    expect_char(text, 13, ':');
    int mi = parse_fixed_int(text, 14, 2, "minute");
    expect_char(text, 16, ':');
    int s = parse_fixed_int(text, 17, 2, "second");
    if (h > 23) throw std::invalid_argument("invalid hour");
    if (mi > 59) throw std::invalid_argument("invalid minute");
    if (s > 60) throw std::invalid_argument("invalid second");
    if (s == 60) s = 59;  // fold leap second

    size_t pos = 19;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        size_t digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw std::invalid_argument("malformed timestamp");
    }

    int offset_sec = 0;
    if (pos < text.size()) {
        char c = text[pos];
        if (c == 'Z') {
            ++pos;
        } else if (c == '+' || c == '-') {
            int oh = parse_fixed_int(text, pos + 1, 2, "offset hour");
            expect_char(text, pos + 3, ':');
            int om = parse_fixed_int(text, pos + 4, 2, "offset minute");
            offset_sec = (oh * 60 + om) * 60;
            if (c == '-') offset_sec = -offset_sec;
            pos += 6;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("malformed timestamp");

    Date day = make_date(y, mo, d);
    std::int64_t secs =
        static_cast<std::int64_t>(day.days) * kSecondsPerDay + h * 3600 + mi * 60 + s;
    return Timestamp{secs - offset_sec};
}

std::string format_timestamp(Timestamp t) {
    std::int64_t day = floor_div(t.seconds, kSecondsPerDay);
    int sod = static_cast<int>(t.seconds - day * kSecondsPerDay);
    int y, m, d;
    civil_from_days(day, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", y, m, d, sod / 3600,
                  (sod / 60) % 60, sod % 60);
    return buf;
}

Timestamp timestamp_at(Date d, int second_of_day) {
    return Timestamp{static_cast<std::int64_t>(d.days) * kSecondsPerDay + second_of_day};
}

Date local_date(Timestamp t, int tz_offset_min) {
    std::int64_t local = t.seconds + static_cast<std::int64_t>(tz_offset_min) * 60;
    return Date{static_cast<std::int32_t>(floor_div(local, kSecondsPerDay))};
}

int local_second_of_day(Timestamp t, int tz_offset_min) {
    std::int64_t local = t.seconds + static_cast<std::int64_t>(tz_offset_min) * 60;
    std::int64_t day = floor_div(local, kSecondsPerDay);
    return static_cast<int>(local - day * kSecondsPerDay);
}

}  // namespace mcorr
