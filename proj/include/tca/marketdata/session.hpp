#pragma once

#include "tca/core/date.hpp"
#include "tca/marketdata/types.hpp"

namespace tca::md {

/// Half-hour session grids.
///   HK: 09:30-12:00 and 13:00-16:00  -> 11 slots
///   SH: 09:30-11:30 and 13:00-15:00  ->  8 slots
struct Session {
  static int slots(Exchange e) { return e == Exchange::HK ? 11 : 8; }

  /// Start of a slot as seconds-of-day.
  static int slot_start(Exchange e, int slot);

  /// Maps a seconds-of-day to the containing slot; times outside the
  /// session clamp to the nearest slot.
  static int slot_of(Exchange e, int seconds_of_day);

  static int slot_of_ts(Exchange e, Timestamp ts) {
    return slot_of(e, seconds_of_day(ts));
  }

  static bool valid_slot(Exchange e, int slot) {
    return slot >= 0 && slot < slots(e);
  }
};

}  // namespace tca::md
