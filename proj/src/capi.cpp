#include "gframe/gframe.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "gframe/duals.hpp"
#include "gframe/error.hpp"
#include "gframe/frame.hpp"
#include "gframe/generators.hpp"
#include "gframe/io.hpp"
#include "gframe/report.hpp"

struct gframe_frame {
  gframe::GFrame frame;
};

namespace {

using gframe::Complex;
using gframe::ComplexVector;
using gframe::ErrorCode;
using gframe::GFrame;

thread_local std::string last_error;
thread_local double last_lambda_min = std::numeric_limits<double>::quiet_NaN();

gframe_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return GFRAME_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return GFRAME_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotSquare: return GFRAME_ERR_NOT_SQUARE;
    case ErrorCode::NotHermitian: return GFRAME_ERR_NOT_HERMITIAN;
    case ErrorCode::NoConvergence: return GFRAME_ERR_NO_CONVERGENCE;
    case ErrorCode::NotPositiveDefinite: return GFRAME_ERR_NOT_POSITIVE_DEFINITE;
    case ErrorCode::NotAFrame: return GFRAME_ERR_NOT_A_FRAME;
    case ErrorCode::NotParseval: return GFRAME_ERR_NOT_PARSEVAL;
    case ErrorCode::NotADual: return GFRAME_ERR_NOT_A_DUAL;
    case ErrorCode::EpsilonOutOfRange: return GFRAME_ERR_EPSILON_OUT_OF_RANGE;
    case ErrorCode::RetryCapExceeded: return GFRAME_ERR_RETRY_CAP_EXCEEDED;
    case ErrorCode::Parse: return GFRAME_ERR_PARSE;
    case ErrorCode::Io: return GFRAME_ERR_IO;
  }
  return GFRAME_ERR_INTERNAL;
}

gframe_status report(gframe_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating every exception into a status code.
template <class Body>
gframe_status guarded(Body&& body) noexcept {
  last_error.clear();
  last_lambda_min = std::numeric_limits<double>::quiet_NaN();
  try {
    body();
    return GFRAME_OK;
  } catch (const gframe::Error& e) {
    if (e.lambda_min()) last_lambda_min = *e.lambda_min();
    return report(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return report(GFRAME_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return report(GFRAME_ERR_INTERNAL, e.what());
  } catch (...) {
    return report(GFRAME_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool condition, const char* what) {
  if (!condition) gframe::fail(ErrorCode::InvalidArgument, what);
}

gframe_frame* wrap(GFrame f) { return new gframe_frame{std::move(f)}; }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ComplexVector read_vector(const double* re, const double* im, std::size_t n) {
  require(re != nullptr, "real part must not be null");
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(re[i], im ? im[i] : 0.0);
  if (!gframe::all_finite(v)) gframe::fail(ErrorCode::InvalidArgument, "vector entries must be finite");
  return v;
}

void write_vector(const ComplexVector& v, double* re, double* im) {
  require(re != nullptr, "output real part must not be null");
  for (std::size_t i = 0; i < v.size(); ++i) {
    re[i] = v[i].real();
    if (im) im[i] = v[i].imag();
  }
}

std::vector<std::size_t> read_counts(const size_t* counts, size_t len) {
  require(counts != nullptr || len == 0, "counts must not be null");
  return std::vector<std::size_t>(counts, counts + len);
}

}  // namespace

extern "C" {

const char* gframe_version(void) { return "1.0.0"; }

const char* gframe_status_string(gframe_status status) {
  switch (status) {
    case GFRAME_OK: return "ok";
    case GFRAME_ERR_INVALID_ARGUMENT: return gframe::to_string(ErrorCode::InvalidArgument);
    case GFRAME_ERR_DIMENSION_MISMATCH: return gframe::to_string(ErrorCode::DimensionMismatch);
    case GFRAME_ERR_NOT_SQUARE: return gframe::to_string(ErrorCode::NotSquare);
    case GFRAME_ERR_NOT_HERMITIAN: return gframe::to_string(ErrorCode::NotHermitian);
    case GFRAME_ERR_NO_CONVERGENCE: return gframe::to_string(ErrorCode::NoConvergence);
    case GFRAME_ERR_NOT_POSITIVE_DEFINITE: return gframe::to_string(ErrorCode::NotPositiveDefinite);
    case GFRAME_ERR_NOT_A_FRAME: return gframe::to_string(ErrorCode::NotAFrame);
    case GFRAME_ERR_NOT_PARSEVAL: return gframe::to_string(ErrorCode::NotParseval);
    case GFRAME_ERR_NOT_A_DUAL: return gframe::to_string(ErrorCode::NotADual);
    case GFRAME_ERR_EPSILON_OUT_OF_RANGE: return gframe::to_string(ErrorCode::EpsilonOutOfRange);
    case GFRAME_ERR_RETRY_CAP_EXCEEDED: return gframe::to_string(ErrorCode::RetryCapExceeded);
    case GFRAME_ERR_PARSE: return gframe::to_string(ErrorCode::Parse);
    case GFRAME_ERR_IO: return gframe::to_string(ErrorCode::Io);
    case GFRAME_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gframe_last_error(void) { return last_error.c_str(); }
double gframe_last_lambda_min(void) { return last_lambda_min; }
void gframe_string_free(char* s) { std::free(s); }

gframe_status gframe_frame_create(size_t dim_h, size_t count, const size_t* rows, const double* re,
                                  const double* im, gframe_frame** out) {
  return guarded([&] {
    require(out != nullptr && rows != nullptr && re != nullptr, "null argument");
    require(count > 0, "frame needs at least one operator");
    std::vector<gframe::ComplexMatrix> ops;
    ops.reserve(count);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < count; ++i) {
      require(rows[i] > 0 && dim_h > 0, "operator shapes must be positive");
      const std::size_t len = rows[i] * dim_h;
      std::vector<Complex> values(len);
      for (std::size_t j = 0; j < len; ++j) {
        values[j] = Complex(re[offset + j], im ? im[offset + j] : 0.0);
      }
      offset += len;
      ops.emplace_back(rows[i], dim_h, std::move(values));
    }
    *out = wrap(GFrame(dim_h, std::move(ops)));
  });
}

gframe_status gframe_frame_clone(const gframe_frame* f, gframe_frame** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = wrap(f->frame);
  });
}

void gframe_frame_free(gframe_frame* f) { delete f; }

size_t gframe_frame_dim(const gframe_frame* f) { return f ? f->frame.dim() : 0; }
size_t gframe_frame_count(const gframe_frame* f) { return f ? f->frame.size() : 0; }
size_t gframe_frame_rows(const gframe_frame* f, size_t index) {
  return (f && index < f->frame.size()) ? f->frame[index].rows() : 0;
}

gframe_status gframe_frame_operator_data(const gframe_frame* f, size_t index, double* re,
                                         double* im) {
  return guarded([&] {
    require(f != nullptr && re != nullptr, "null argument");
    require(index < f->frame.size(), "operator index out of range");
    const auto entries = f->frame[index].entries();
    write_vector(ComplexVector(entries.begin(), entries.end()), re, im);
  });
}

gframe_status gframe_frame_from_json(const char* json, gframe_frame** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = wrap(gframe::parse_frame(json));
  });
}

gframe_status gframe_frame_to_json(const gframe_frame* f, char** json_out) {
  return guarded([&] {
    require(f != nullptr && json_out != nullptr, "null argument");
    *json_out = copy_string(gframe::dump_frame(f->frame));
  });
}

gframe_status gframe_frame_load(const char* path, gframe_frame** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = wrap(gframe::load_frame(path));
  });
}

gframe_status gframe_frame_save(const gframe_frame* f, const char* path) {
  return guarded([&] {
    require(f != nullptr && path != nullptr, "null argument");
    gframe::save_frame(f->frame, path);
  });
}

gframe_status gframe_frame_operator(const gframe_frame* f, double* re, double* im) {
  return guarded([&] {
    require(f != nullptr && re != nullptr, "null argument");
    const auto s = gframe::frame_operator(f->frame);
    const auto entries = s.matrix.entries();
    write_vector(ComplexVector(entries.begin(), entries.end()), re, im);
  });
}

gframe_status gframe_validate(const gframe_frame* f, gframe_bounds* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    const auto b = gframe::validate_frame(f->frame);
    *out = gframe_bounds{b.lower, b.upper, *b.epsilon};
  });
}

gframe_status gframe_analysis(const gframe_frame* f, const double* x_re, const double* x_im,
                              double* y_re, double* y_im) {
  return guarded([&] {
    require(f != nullptr, "null frame");
    const auto x = read_vector(x_re, x_im, f->frame.dim());
    ComplexVector flat;
    for (const auto& part : gframe::analysis_apply(f->frame, x)) {
      flat.insert(flat.end(), part.begin(), part.end());
    }
    write_vector(flat, y_re, y_im);
  });
}

gframe_status gframe_synthesis(const gframe_frame* f, const double* y_re, const double* y_im,
                               double* x_re, double* x_im) {
  return guarded([&] {
    require(f != nullptr, "null frame");
    std::size_t total = 0;
    for (std::size_t k : f->frame.output_dims()) total += k;
    const auto flat = read_vector(y_re, y_im, total);
    std::vector<ComplexVector> parts;
    std::size_t offset = 0;
    for (std::size_t k : f->frame.output_dims()) {
      parts.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(offset),
                         flat.begin() + static_cast<std::ptrdiff_t>(offset + k));
      offset += k;
    }
    write_vector(gframe::synthesis_apply(f->frame, parts), x_re, x_im);
  });
}

gframe_status gframe_reconstruct(const gframe_frame* f, const double* x_re, const double* x_im,
                                 double* out_re, double* out_im) {
  return guarded([&] {
    require(f != nullptr, "null frame");
    const auto x = read_vector(x_re, x_im, f->frame.dim());
    write_vector(gframe::reconstruct(f->frame, x), out_re, out_im);
  });
}

gframe_status gframe_canonical_parseval(const gframe_frame* f, gframe_frame** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = wrap(gframe::canonical_parseval(f->frame));
  });
}

gframe_status gframe_canonical_dual(const gframe_frame* f, gframe_frame** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = wrap(gframe::canonical_dual(f->frame));
  });
}

gframe_status gframe_random_alternate_dual(const gframe_frame* f, double magnitude, uint64_t seed,
                                           gframe_frame** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    *out = wrap(gframe::random_alternate_dual(f->frame, magnitude, seed));
  });
}

gframe_status gframe_verify_alternate_dual(const gframe_frame* lam, const gframe_frame* gam,
                                           gframe_dual_certificate* out) {
  return guarded([&] {
    require(lam != nullptr && gam != nullptr && out != nullptr, "null argument");
    const auto cert = gframe::verify_alternate_dual(lam->frame, gam->frame);
    *out = gframe_dual_certificate{cert.residual, cert.tolerance, cert.passed ? 1 : 0};
  });
}

gframe_status gframe_frobenius_distance_sq(const gframe_frame* a, const gframe_frame* b,
                                           double* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = gframe::frobenius_distance_sq(a->frame, b->frame);
  });
}

gframe_status gframe_parseval_proximity_bound(const gframe_frame* f, gframe_proximity* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    const auto b = gframe::parseval_proximity_bound(f->frame);
    *out = gframe_proximity{b.gap, b.bound};
  });
}

gframe_status gframe_dual_proximity_bound(const gframe_frame* f, gframe_proximity* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    const auto b = gframe::dual_proximity_bound(f->frame);
    *out = gframe_proximity{b.gap, b.bound};
  });
}

gframe_status gframe_gen_random(size_t n, const size_t* counts, size_t count_len, uint64_t seed,
                                gframe_frame** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(gframe::random_gframe(n, read_counts(counts, count_len), seed));
  });
}

gframe_status gframe_gen_parseval(size_t n, const size_t* counts, size_t count_len, uint64_t seed,
                                  gframe_frame** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(gframe::random_parseval_gframe(n, read_counts(counts, count_len), seed));
  });
}

gframe_status gframe_gen_nearly_parseval(size_t n, const size_t* counts, size_t count_len,
                                         double epsilon, uint64_t seed, gframe_frame** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(gframe::nearly_parseval_gframe(n, read_counts(counts, count_len), epsilon, seed));
  });
}

gframe_status gframe_gen_extremal(size_t n, double epsilon, gframe_frame** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(gframe::extremal_frame(n, epsilon));
  });
}

gframe_status gframe_analyze_json(const gframe_frame* f, char** json_out) {
  return guarded([&] {
    require(f != nullptr && json_out != nullptr, "null argument");
    *json_out = copy_string(gframe::analyze_frame(f->frame).dump(2));
  });
}

gframe_status gframe_verify_json(const gframe_frame* f, const char* suite, unsigned trials,
                                 uint64_t seed, char** json_out, int* overall) {
  return guarded([&] {
    require(f != nullptr && suite != nullptr && json_out != nullptr, "null argument");
    const auto parsed = gframe::parse_suite(suite);
    if (!parsed) gframe::fail(ErrorCode::InvalidArgument, std::string("unknown suite: ") + suite);
    const auto rep = gframe::verify_frame(f->frame, *parsed, trials, seed);
    *json_out = copy_string(rep.to_json().dump(2));
    if (overall) *overall = rep.overall ? 1 : 0;
  });
}

}  // extern "C"
