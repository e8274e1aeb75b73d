#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmtree {

enum class ErrorCode {
  ParseError,
  UnknownVertex,
  DuplicateVertex,
  Loop,
  MultiEdge,
  NotConnected,
  CycleDetected,
  MissingValue,
  NonFiniteValue,
  NotWeaklyIncreasing,
  ValueSharedByNonIncident,
  MoreThanTwoShareValue,
  DomainMismatch,
  MalformedMergeTree,
  NotThin,
  MalformedSequence,
  BudgetExceeded,
  InvalidArgument,
};

/// Stable diagnostic name of an error code, e.g. "CycleDetected".
std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace dmtree
