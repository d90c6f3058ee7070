#pragma once

#include <stdexcept>
#include <string>

namespace tca {

/// Error categories surfaced by the engine. The CLI maps these to exit
/// code 2 (data error); anything else is an internal error (exit 3).
enum class Errc {
  malformed_row,
  unknown_reference,
  duplicate_key,
  no_data,
  empty_fills,
  partial_fill,
  zero_duration,
  rank_deficient,
  insufficient_data,
  degenerate_variance,
  insufficient_overlap,
  no_overlap,
  missing_fx,
  missing_base_price,
  zero_base,
  infeasible_schedule,
  bad_config,
  io_error,
};

const char* errc_name(Errc c);

class TcaError : public std::runtime_error {
 public:
  TcaError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw TcaError(code, message);
}

}  // namespace tca
