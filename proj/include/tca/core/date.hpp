#pragma once

#include <cstdint>
#include <string>

namespace tca {

/// Calendar date stored as days since 1970-01-01.
using Date = std::int32_t;

/// Wall-clock timestamp stored as seconds since 1970-01-01T00:00:00.
/// Exchange timestamps are naive local times; no timezone conversion is
/// applied anywhere.
using Timestamp = std::int64_t;

constexpr std::int64_t kSecondsPerDay = 86400;

Date make_date(int year, int month, int day);

/// Parses "YYYY-MM-DD". Throws TcaError(malformed_row) on bad input.
Date parse_date(const std::string& s);
std::string format_date(Date d);

/// Parses "YYYY-MM-DDTHH:MM:SS" (a single space also accepted as the
/// separator). Seconds are required; no fractional part.
Timestamp parse_timestamp(const std::string& s);
std::string format_timestamp(Timestamp ts);

inline Date date_of(Timestamp ts) {
  return static_cast<Date>(ts >= 0 ? ts / kSecondsPerDay
                                   : (ts - kSecondsPerDay + 1) / kSecondsPerDay);
}

inline int seconds_of_day(Timestamp ts) {
  return static_cast<int>(ts - static_cast<std::int64_t>(date_of(ts)) * kSecondsPerDay);
}

inline Timestamp at_time(Date d, int seconds) {
  return static_cast<Timestamp>(d) * kSecondsPerDay + seconds;
}

/// True for Monday..Friday.
bool is_weekday(Date d);

}  // namespace tca
