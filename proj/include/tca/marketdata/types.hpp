#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tca/core/date.hpp"

namespace tca::md {

enum class Exchange { HK, SH };
enum class Side { Buy, Sell };

const char* to_string(Exchange e);
const char* to_string(Side s);
Exchange parse_exchange(const std::string& s);
Side parse_side(const std::string& s);

struct SecurityRecord {
  std::string security_id;
  Exchange exchange = Exchange::HK;
  std::string currency;  // HKD for HK, CNY for SH
  double market_cap_usd = 0.0;
  std::string sector;
  std::optional<std::string> dual_pair_id;

  bool operator==(const SecurityRecord&) const = default;
};

struct IntradayBar {
  std::string security_id;
  Date trading_date = 0;
  int interval_index = 0;  // 0-based half-hour session slot
  double open = 0, high = 0, low = 0, close = 0;
  long long volume = 0;
  long long upticks = 0;    // zero when unavailable
  long long downticks = 0;  // zero when unavailable

  bool operator==(const IntradayBar&) const = default;
};

struct FxRate {
  Date trading_date = 0;
  double hkd_per_cny = 0.0;  // multiplier taking an HKD price to CNY

  bool operator==(const FxRate&) const = default;
};

struct OrderRecord {
  std::string order_id;
  std::string security_id;
  Side side = Side::Buy;
  long long total_shares = 0;
  Timestamp arrival_ts = 0;
  Timestamp end_ts = 0;
  double arrival_price = 0.0;

  bool operator==(const OrderRecord&) const = default;
};

struct Fill {
  std::string order_id;
  Timestamp ts = 0;
  long long shares = 0;
  double price = 0.0;

  bool operator==(const Fill&) const = default;
};

struct VolumeCurve {
  std::string security_id;
  Date trading_date = 0;
  std::vector<double> fractions;  // one per session slot
  bool zero_volume_day = false;
  int days_used = 1;  // >1 for trailing profiles

  bool operator==(const VolumeCurve&) const = default;
};

/// Immutable in-memory dataset with referential integrity. Built once by
/// load_dataset and shared read-only by every downstream module.
struct Dataset {
  std::vector<SecurityRecord> securities;           // sorted by id
  std::map<std::string, std::size_t> security_index;

  std::vector<OrderRecord> orders;                  // sorted by id
  std::map<std::string, std::size_t> order_index;

  // Fills grouped per order id, each group time-ordered.
  std::map<std::string, std::vector<Fill>> fills;

  // bars[security_id][date] = bars of that day sorted by interval.
  std::map<std::string, std::map<Date, std::vector<IntradayBar>>> bars;

  std::map<Date, double> fx;  // date -> hkd_per_cny

  std::size_t fill_count = 0;

  bool operator==(const Dataset&) const = default;

  const SecurityRecord& security(const std::string& id) const;
  const OrderRecord& order(const std::string& id) const;
  bool has_security(const std::string& id) const {
    return security_index.count(id) != 0;
  }

  /// Trading dates (ascending) with at least one bar for the security.
  std::vector<Date> trading_dates(const std::string& security_id) const;

  /// All dual pairs as (pair_id, hk_security, sh_security), sorted by pair id.
  std::vector<std::array<std::string, 3>> dual_pairs() const;
};

}  // namespace tca::md
