#include "tca/core/error.hpp"

namespace tca {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_row: return "MalformedRow";
    case Errc::unknown_reference: return "UnknownReference";
    case Errc::duplicate_key: return "DuplicateKey";
    case Errc::no_data: return "NoData";
    case Errc::empty_fills: return "EmptyFills";
    case Errc::partial_fill: return "PartialFill";
    case Errc::zero_duration: return "ZeroDuration";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::insufficient_data: return "InsufficientData";
    case Errc::degenerate_variance: return "DegenerateVariance";
    case Errc::insufficient_overlap: return "InsufficientOverlap";
    case Errc::no_overlap: return "NoOverlap";
    case Errc::missing_fx: return "MissingFx";
    case Errc::missing_base_price: return "MissingBasePrice";
    case Errc::zero_base: return "ZeroBase";
    case Errc::infeasible_schedule: return "InfeasibleSchedule";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace tca
