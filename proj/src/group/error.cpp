#include "malle/error.hpp"

namespace malle {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NonCyclicQuotient: return "NonCyclicQuotient";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::InvalidTwist: return "InvalidTwist";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::NoAdmissibleSubgroup: return "NoAdmissibleSubgroup";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TrivialClassPresent: return "TrivialClassPresent";
    case ErrorCode::InsufficientRange: return "InsufficientRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch:
    case ErrorCode::InvalidTwist:
    case ErrorCode::ParseError:
    case ErrorCode::PointOutOfRange:
    case ErrorCode::UnknownPreset:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotASubgroup:
      return true;
    default:
      return false;
  }
}

}  // namespace malle
