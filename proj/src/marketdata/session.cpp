#include "tca/marketdata/session.hpp"

namespace tca::md {

namespace {
constexpr int kHalfHour = 1800;
constexpr int kMorningOpen = 9 * 3600 + 30 * 60;   // 09:30
constexpr int kAfternoonOpen = 13 * 3600;          // 13:00

int morning_slots(Exchange e) { return e == Exchange::HK ? 5 : 4; }
}  // namespace

int Session::slot_start(Exchange e, int slot) {
  const int m = morning_slots(e);
  if (slot < m) return kMorningOpen + slot * kHalfHour;
  return kAfternoonOpen + (slot - m) * kHalfHour;
}

int Session::slot_of(Exchange e, int sec) {
  const int m = morning_slots(e);
  const int total = slots(e);
  if (sec < kMorningOpen) return 0;
  const int morning_close = kMorningOpen + m * kHalfHour;
  if (sec < morning_close) return (sec - kMorningOpen) / kHalfHour;
  // Lunch break maps to whichever side is closer.
  if (sec < kAfternoonOpen)
    return (sec - morning_close < kAfternoonOpen - sec) ? m - 1 : m;
  const int afternoon_close = kAfternoonOpen + (total - m) * kHalfHour;
  if (sec >= afternoon_close) return total - 1;
  return m + (sec - kAfternoonOpen) / kHalfHour;
}

}  // namespace tca::md
