#include "gframe/error.hpp"

namespace gframe {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::NotSquare: return "matrix is not square";
    case ErrorCode::NotHermitian: return "matrix is not Hermitian";
    case ErrorCode::NoConvergence: return "eigensolver did not converge";
    case ErrorCode::NotPositiveDefinite: return "matrix is not positive definite";
    case ErrorCode::NotAFrame: return "not a frame";
    case ErrorCode::NotParseval: return "not a Parseval frame";
    case ErrorCode::NotADual: return "not an alternate dual";
    case ErrorCode::EpsilonOutOfRange: return "epsilon out of range";
    case ErrorCode::RetryCapExceeded: return "retry cap exceeded";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<double> lambda_min)
    : std::runtime_error(message), code_(code), lambda_min_(lambda_min) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gframe
