#include "curling/error.hpp"

#include "curling/types.hpp"

namespace curling {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthOne: return "LengthOne";
    case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::ContainsOne: return "ContainsOne";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MissingDependency: return "MissingDependency";
    case ErrorCode::FormulaOutOfRange: return "FormulaOutOfRange";
    case ErrorCode::RobustnessUndefined: return "RobustnessUndefined";
    case ErrorCode::NotAPeriod: return "NotAPeriod";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::CurlMismatch: return "CurlMismatch";
    case ErrorCode::BadFormat: return "BadFormat";
    case ErrorCode::CacheInvalid: return "CacheInvalid";
  }
  return "Unknown";
}

StepLimitExceeded::StepLimitExceeded(std::vector<std::int64_t> start, std::size_t limit)
    : Error(ErrorCode::StepLimitExceeded,
            "no 1 reached within " + std::to_string(limit) +
                " steps; possible counterexample, start = " + format_sequence(start)),
      start_(std::move(start)),
      limit_(limit) {}

}  // namespace curling
