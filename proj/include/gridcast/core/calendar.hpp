#pragma once

#include <cstdint>
#include <string>

namespace gridcast::core {

/// Civil date/time in UTC. No timezone or DST arithmetic; half-hourly data
/// is indexed by plain epoch seconds.
struct CivilTime {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
    int hour = 0;
    int minute = 0;
    int second = 0;
};

int64_t to_epoch_seconds(const CivilTime& ct);
CivilTime from_epoch_seconds(int64_t t);

/// Parses "YYYY-MM-DD", "YYYY-MM-DD HH:MM[:SS]" or "YYYY-MM-DDTHH:MM[:SS]".
/// Throws std::invalid_argument on malformed input.
int64_t parse_iso8601(const std::string& s);
std::string format_iso8601(int64_t t);

/// Day of week, 0 = Monday .. 6 = Sunday.
int weekday(int64_t t);
/// Day of year, 1-based.
int day_of_year(int64_t t);
int days_in_year(int year);

/// Calendar feature values regenerated from a timestamp. These follow the
/// dataset schema: Instant is the fraction of the day, Posan the fraction of
/// the year, DayType a 7-level weekday one-hot, and the holiday indicators
/// use fixed French-style date windows (documented in calendar.cpp).
struct CalendarFeatures {
    double instant = 0.0;   // [0,1)
    double posan = 0.0;     // [0,1)
    int day_type = 0;       // 0..6, Monday-based
    double weekend = 0.0;
    double summer = 0.0;
    double christmas = 0.0;
    double holiday_zone = 0.0;
};

CalendarFeatures calendar_features(int64_t t);

}  // namespace gridcast::core
