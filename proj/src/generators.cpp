#include "gframe/generators.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gframe/error.hpp"

namespace gframe {

namespace {

constexpr std::uint64_t kShapeStream = 0x7368617065ULL;  // "shape"

void require_feasible(std::size_t n, std::span<const std::size_t> counts) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be at least 1");
  if (counts.empty()) fail(ErrorCode::InvalidArgument, "need at least one operator count");
  for (std::size_t k : counts) {
    if (k == 0) fail(ErrorCode::InvalidArgument, "operator output dimensions must be >= 1");
  }
  const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total < n) {
    fail(ErrorCode::InvalidArgument, "sum of output dimensions " + std::to_string(total) +
                                         " is below n = " + std::to_string(n) +
                                         "; no frame of that shape exists");
  }
}

void orthonormalize_columns(ComplexMatrix& q) {
  const std::size_t n = q.rows();
  for (std::size_t j = 0; j < q.cols(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Complex proj{};
      for (std::size_t r = 0; r < n; ++r) proj += std::conj(q(r, i)) * q(r, j);
      for (std::size_t r = 0; r < n; ++r) q(r, j) -= proj * q(r, i);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, j));
    norm = std::sqrt(norm);
    if (norm == 0.0) fail(ErrorCode::NoConvergence, "Gram-Schmidt hit a dependent column");
    for (std::size_t r = 0; r < n; ++r) q(r, j) /= norm;
  }
}

}  // namespace

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  auto q = rng.gaussian_matrix(n, n);
  orthonormalize_columns(q);
  const auto gram = adjoint_times(q, q) - ComplexMatrix::identity(n);
  if (frobenius_norm(gram) > 1e-10) orthonormalize_columns(q);
  return q;
}

GFrame random_gframe(std::size_t n, std::span<const std::size_t> counts, std::uint64_t seed) {
  require_feasible(n, counts);
  for (int attempt = 0; attempt <= kGeneratorRetryCap; ++attempt) {
    Rng rng(seed, static_cast<std::uint64_t>(attempt));
    std::vector<ComplexMatrix> ops;
    ops.reserve(counts.size());
    for (std::size_t k : counts) ops.push_back(rng.gaussian_matrix(k, n));
    GFrame f(n, std::move(ops));
    try {
      validate_frame(f);
      return f;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAFrame) throw;
    }
  }
  fail(ErrorCode::RetryCapExceeded,
       "no frame drawn after " + std::to_string(kGeneratorRetryCap) + " retries");
}

GFrame random_parseval_gframe(std::size_t n, std::span<const std::size_t> counts,
                              std::uint64_t seed) {
  return canonical_parseval(random_gframe(n, counts, seed));
}

GFrame nearly_parseval_gframe(std::size_t n, std::span<const std::size_t> counts,
                              double epsilon, std::uint64_t seed) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    fail(ErrorCode::EpsilonOutOfRange, "epsilon must lie in [0,1)");
  }
  if (epsilon > 0.0 && n < 2) {
    fail(ErrorCode::InvalidArgument, "a positive epsilon needs n >= 2 to place both endpoints");
  }
  auto base = random_parseval_gframe(n, counts, seed);
  if (epsilon == 0.0) return base;

  Rng rng(seed, kShapeStream);
  std::vector<double> root_spectrum(n);
  root_spectrum.front() = std::sqrt(1.0 + epsilon);
  root_spectrum.back() = std::sqrt(1.0 - epsilon);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    root_spectrum[k] = std::sqrt(rng.uniform_open(1.0 - epsilon, 1.0 + epsilon));
  }
  const auto q = random_unitary(n, rng);

  ComplexMatrix shaping(n, n);  // Q diag(sqrt(mu)) Q*
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += q(i, k) * root_spectrum[k] * std::conj(q(j, k));
      shaping(i, j) = acc;
    }
  }
  return right_multiply(base, symmetrize(shaping));
}

GFrame embed_vector_frame(std::span<const ComplexVector> vectors) {
  if (vectors.empty()) fail(ErrorCode::InvalidArgument, "vector frame is empty");
  const std::size_t n = vectors.front().size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "frame vectors must be non-empty");
  std::vector<ComplexMatrix> ops;
  ops.reserve(vectors.size());
  for (const auto& f : vectors) {
    if (f.size() != n) fail(ErrorCode::DimensionMismatch, "frame vectors have ragged lengths");
    std::vector<Complex> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = std::conj(f[c]);
    ops.emplace_back(1, n, std::move(row));
  }
  return GFrame(n, std::move(ops));
}

}  // namespace gframe
