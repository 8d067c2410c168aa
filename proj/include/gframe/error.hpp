#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gframe {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotSquare,
  NotHermitian,
  NoConvergence,
  NotPositiveDefinite,
  NotAFrame,
  NotParseval,
  NotADual,
  EpsilonOutOfRange,
  RetryCapExceeded,
  Parse,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library. NotAFrame and NotPositiveDefinite
// carry the offending smallest eigenvalue.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<double> lambda_min = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> lambda_min() const noexcept { return lambda_min_; }

 private:
  ErrorCode code_;
  std::optional<double> lambda_min_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace gframe
