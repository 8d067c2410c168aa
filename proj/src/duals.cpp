#include "gframe/duals.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gframe/error.hpp"
#include "gframe/identities.hpp"
#include "gframe/rng.hpp"

namespace gframe {

namespace {

constexpr std::uint64_t kDualStream = 0x6475616cULL;  // "dual"

double nearly_parseval_epsilon(const FrameOperator& s) {
  const auto bounds = validate_frame(s);
  const double eps = *bounds.epsilon;
  if (!(eps < 1.0)) {
    std::ostringstream msg;
    msg << "epsilon = " << eps << " (A = " << bounds.lower << ", B = " << bounds.upper
        << ") is not below 1; the family is not nearly Parseval";
    fail(ErrorCode::EpsilonOutOfRange, msg.str());
  }
  return eps;
}

}  // namespace

DualCertificate verify_alternate_dual(const GFrame& lam, const GFrame& gam,
                                      std::optional<double> tolerance) {
  require_same_shape(lam, gam);
  ComplexMatrix sum(lam.dim(), lam.dim());
  for (std::size_t i = 0; i < lam.size(); ++i) sum += adjoint_times(lam[i], gam[i]);
  sum -= ComplexMatrix::identity(lam.dim());

  DualCertificate cert{};
  cert.residual = frobenius_norm(sum);
  cert.tolerance = tolerance.value_or(kDualTolerance * static_cast<double>(lam.dim()));
  cert.passed = cert.residual <= cert.tolerance;
  return cert;
}

GFrame random_alternate_dual(const GFrame& lam, double magnitude, std::uint64_t seed) {
  if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) {
    fail(ErrorCode::InvalidArgument, "dual perturbation magnitude must be finite and >= 0");
  }
  const auto s = certified_frame_operator(lam);
  const auto s_inv = matrix_power(s.eig, -1.0);
  if (magnitude == 0.0) return right_multiply(lam, s_inv);

  const std::size_t n = lam.dim();
  Rng rng(seed, kDualStream);
  std::vector<ComplexMatrix> deltas;
  deltas.reserve(lam.size());
  for (const auto& op : lam.operators()) {
    auto delta = rng.gaussian_matrix(op.rows(), n);
    delta *= magnitude / frobenius_norm(delta);
    deltas.push_back(std::move(delta));
  }

  ComplexMatrix mixed(n, n);  // sum_j Lambda_j^* Delta_j
  for (std::size_t j = 0; j < lam.size(); ++j) mixed += adjoint_times(lam[j], deltas[j]);

  std::vector<ComplexMatrix> duals;
  duals.reserve(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const auto canonical = matmul(lam[i], s_inv);
    duals.push_back(canonical + deltas[i] - matmul(canonical, mixed));
  }
  return GFrame(n, std::move(duals));
}

ProximityBound parseval_proximity_bound(const GFrame& g) {
  const auto s = frame_operator(g);
  const double eps = nearly_parseval_epsilon(s);
  const double lower_side = 1.0 - std::sqrt(1.0 - eps);
  // The bound uses 1 - sqrt(1 - eps) as the binding side of the spectrum.
  if (std::sqrt(1.0 + eps) - 1.0 > lower_side) {
    throw std::logic_error("sqrt(1 + eps) - 1 exceeded 1 - sqrt(1 - eps)");
  }
  const double n = static_cast<double>(g.dim());
  return {najati_gap(g).gap, n * lower_side * lower_side};
}

ProximityBound dual_proximity_bound(const GFrame& g) {
  const auto s = frame_operator(g);
  const double eps = nearly_parseval_epsilon(s);
  const double n = static_cast<double>(g.dim());
  return {frobenius_distance_sq(g, canonical_dual(g)), n * eps * eps / (1.0 - eps)};
}

GFrame extremal_frame(std::size_t n, double epsilon) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "extremal frame needs n >= 1");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    fail(ErrorCode::EpsilonOutOfRange, "epsilon must lie in [0,1)");
  }
  const double scale = std::sqrt(1.0 - epsilon);
  std::vector<ComplexMatrix> ops;
  ops.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix row(1, n);
    row(0, k) = scale;
    ops.push_back(std::move(row));
  }
  return GFrame(n, std::move(ops));
}

}  // namespace gframe
