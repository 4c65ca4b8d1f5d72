#include "simapprox/errors.hpp"

namespace simapprox {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain: return "domain";
    case ErrorCode::OverlappingDiscs: return "overlapping-discs";
    case ErrorCode::ConditioningFailure: return "conditioning-failure";
    case ErrorCode::OrderCapExceeded: return "order-cap-exceeded";
    case ErrorCode::ScanExhausted: return "scan-exhausted";
    case ErrorCode::SlackDepleted: return "slack-depleted";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::NoCloseTarget: return "no-close-target";
    case ErrorCode::MissingWindow: return "missing-window";
    case ErrorCode::Config: return "config";
    case ErrorCode::Archive: return "archive";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace simapprox
