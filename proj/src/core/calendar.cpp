#include "gridcast/core/calendar.hpp"

#include <cstdio>
#include <stdexcept>

namespace gridcast::core {

namespace {

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t yy = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

// (month, day) window test, inclusive on both ends; handles year wrap.
bool in_window(int m, int d, int m0, int d0, int m1, int d1) {
    const int x = m * 100 + d, a = m0 * 100 + d0, b = m1 * 100 + d1;
    if (a <= b) return x >= a && x <= b;
    return x >= a || x <= b;
}

}  // namespace

int64_t to_epoch_seconds(const CivilTime& ct) {
    return days_from_civil(ct.year, ct.month, ct.day) * 86400 + ct.hour * 3600 +
           ct.minute * 60 + ct.second;
}

CivilTime from_epoch_seconds(int64_t t) {
    int64_t days = t / 86400;
    int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    CivilTime ct;
    civil_from_days(days, ct.year, ct.month, ct.day);
    ct.hour = static_cast<int>(rem / 3600);
    ct.minute = static_cast<int>((rem % 3600) / 60);
    ct.second = static_cast<int>(rem % 60);
    return ct;
}

int64_t parse_iso8601(const std::string& s) {
    CivilTime ct;
    char sep = 0;
    int n = std::sscanf(s.c_str(), "%d-%d-%d%c%d:%d:%d", &ct.year, &ct.month, &ct.day,
                        &sep, &ct.hour, &ct.minute, &ct.second);
    if (n != 3 && n != 6 && n != 7) {
        throw std::invalid_argument("unparseable date: '" + s + "'");
    }
    if (n >= 6 && sep != ' ' && sep != 'T') {
        throw std::invalid_argument("unparseable date separator: '" + s + "'");
    }
    if (ct.month < 1 || ct.month > 12 || ct.day < 1 || ct.day > 31 || ct.hour > 23 ||
        ct.minute > 59 || ct.second > 60) {
        throw std::invalid_argument("date out of range: '" + s + "'");
    }
    return to_epoch_seconds(ct);
}

std::string format_iso8601(int64_t t) {
    const CivilTime ct = from_epoch_seconds(t);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02d:%02d:%02d", ct.year, ct.month,
                  ct.day, ct.hour, ct.minute, ct.second);
    return buf;
}

int weekday(int64_t t) {
    int64_t days = t / 86400;
    if (t % 86400 < 0) days -= 1;
    // 1970-01-01 was a Thursday (Monday-based index 3).
    int w = static_cast<int>((days + 3) % 7);
    if (w < 0) w += 7;
    return w;
}

int day_of_year(int64_t t) {
    const CivilTime ct = from_epoch_seconds(t);
    const int64_t jan1 = days_from_civil(ct.year, 1, 1);
    const int64_t today = days_from_civil(ct.year, ct.month, ct.day);
    return static_cast<int>(today - jan1) + 1;
}

int days_in_year(int year) { return is_leap(year) ? 366 : 365; }

CalendarFeatures calendar_features(int64_t t) {
    // Holiday windows (fixed, schema convention):
    //   Summer        Jul 15 .. Aug 31
    //   Christmas     Dec 20 .. Jan 05
    //   Holiday_zone  Feb 08 .. Mar 10, Apr 06 .. May 06, Oct 17 .. Nov 03
    const CivilTime ct = from_epoch_seconds(t);
    CalendarFeatures f;
    int64_t rem = t % 86400;
    if (rem < 0) rem += 86400;
    f.instant = static_cast<double>(rem) / 86400.0;
    f.posan = static_cast<double>(day_of_year(t) - 1) / days_in_year(ct.year);
    f.day_type = weekday(t);
    f.weekend = f.day_type >= 5 ? 1.0 : 0.0;
    f.summer = in_window(ct.month, ct.day, 7, 15, 8, 31) ? 1.0 : 0.0;
    f.christmas = in_window(ct.month, ct.day, 12, 20, 1, 5) ? 1.0 : 0.0;
    f.holiday_zone = (in_window(ct.month, ct.day, 2, 8, 3, 10) ||
                      in_window(ct.month, ct.day, 4, 6, 5, 6) ||
                      in_window(ct.month, ct.day, 10, 17, 11, 3))
                         ? 1.0
                         : 0.0;
    return f;
}

}  // namespace gridcast::core
