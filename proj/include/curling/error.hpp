#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace curling {

enum class ErrorCode {
  EmptyInput,
  LengthOne,
  StepLimitExceeded,
  ContainsOne,
  CapExceeded,
  IndexOutOfRange,
  MissingDependency,
  FormulaOutOfRange,
  RobustnessUndefined,
  NotAPeriod,
  NotPrimitive,
  CurlMismatch,
  BadFormat,
  CacheInvalid,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The CLI maps it to exit 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// The extension did not reach a 1 within the step budget. Carries the starting
/// sequence verbatim since a hit is a potential counterexample to the conjecture.
class StepLimitExceeded : public Error {
 public:
  StepLimitExceeded(std::vector<std::int64_t> start, std::size_t limit);

  const std::vector<std::int64_t>& start() const noexcept { return start_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::vector<std::int64_t> start_;
  std::size_t limit_;
};

}  // namespace curling
