#include "dmtree/error.hpp"

namespace dmtree {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::Loop: return "Loop";
    case ErrorCode::MultiEdge: return "MultiEdge";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NotWeaklyIncreasing: return "NotWeaklyIncreasing";
    case ErrorCode::ValueSharedByNonIncident: return "ValueSharedByNonIncident";
    case ErrorCode::MoreThanTwoShareValue: return "MoreThanTwoShareValue";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::MalformedMergeTree: return "MalformedMergeTree";
    case ErrorCode::NotThin: return "NotThin";
    case ErrorCode::MalformedSequence: return "MalformedSequence";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace dmtree
