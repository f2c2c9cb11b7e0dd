#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace malle {

enum class ErrorCode {
  DegreeMismatch,
  OrderCapExceeded,
  NotASubgroup,
  NonCyclicQuotient,
  TrivialGroup,
  InvalidTwist,
  NotSplit,
  NotAHomomorphism,
  BadModulus,
  NoAdmissibleSubgroup,
  EnumerationCapExceeded,
  IndexOutOfRange,
  TrivialClassPresent,
  InsufficientRange,
  ParseError,
  PointOutOfRange,
  UnknownPreset,
  InvalidArgument,
};

/// Stable machine-readable name, e.g. "OrderCapExceeded".
std::string_view to_string(ErrorCode code);

/// True for input problems (bad text, bad flags) as opposed to failures of a
/// well-posed computation.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace malle
