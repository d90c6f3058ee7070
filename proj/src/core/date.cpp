#include "tca/core/date.hpp"

#include <chrono>
#include <cstdio>

#include "tca/core/error.hpp"

namespace tca {

namespace {

using days = std::chrono::days;
using sys_days = std::chrono::sys_days;

bool parse_int(const char* s, int len, int& out) {
  out = 0;
  for (int i = 0; i < len; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    out = out * 10 + (s[i] - '0');
  }
  return true;
}

}  // namespace

Date make_date(int year, int month, int day) {
  const std::chrono::year_month_day ymd{std::chrono::year(year),
                                        std::chrono::month(unsigned(month)),
                                        std::chrono::day(unsigned(day))};
  if (!ymd.ok()) fail(Errc::malformed_row, "invalid calendar date");
  return static_cast<Date>(sys_days(ymd).time_since_epoch().count());
}

Date parse_date(const std::string& s) {
  int y, m, d;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
      !parse_int(s.data(), 4, y) || !parse_int(s.data() + 5, 2, m) ||
      !parse_int(s.data() + 8, 2, d)) {
    fail(Errc::malformed_row, "bad date '" + s + "', expected YYYY-MM-DD");
  }
  return make_date(y, m, d);
}

std::string format_date(Date d) {
  const std::chrono::year_month_day ymd{sys_days(days(d))};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

Timestamp parse_timestamp(const std::string& s) {
  if (s.size() != 19 || (s[10] != 'T' && s[10] != ' ') || s[13] != ':' || s[16] != ':')
    fail(Errc::malformed_row, "bad timestamp '" + s + "', expected YYYY-MM-DDTHH:MM:SS");
  const Date d = parse_date(s.substr(0, 10));
  int hh, mm, ss;
  if (!parse_int(s.data() + 11, 2, hh) || !parse_int(s.data() + 14, 2, mm) ||
      !parse_int(s.data() + 17, 2, ss) || hh > 23 || mm > 59 || ss > 60) {
    fail(Errc::malformed_row, "bad time in '" + s + "'");
  }
  return at_time(d, hh * 3600 + mm * 60 + ss);
}

std::string format_timestamp(Timestamp ts) {
  const int sec = seconds_of_day(ts);
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%sT%02d:%02d:%02d",
                format_date(date_of(ts)).c_str(), sec / 3600, (sec / 60) % 60,
                sec % 60);
  return buf;
}

bool is_weekday(Date d) {
  const std::chrono::weekday wd{sys_days(days(d))};
  return wd != std::chrono::Saturday && wd != std::chrono::Sunday;
}

}  // namespace tca
