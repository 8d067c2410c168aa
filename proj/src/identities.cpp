#include "gframe/identities.hpp"

#include <sstream>
#include <string>

#include "gframe/duals.hpp"
#include "gframe/error.hpp"

namespace gframe {

namespace {

void require_vector_length(std::span<const Complex> x, std::size_t n) {
  if (x.size() != n) {
    fail(ErrorCode::DimensionMismatch,
         "vector length " + std::to_string(x.size()) + ", frame dimension " + std::to_string(n));
  }
}

void require_dual(const GFrame& lam, const GFrame& gam) {
  const auto cert = verify_alternate_dual(lam, gam);
  if (!cert.passed) {
    std::ostringstream msg;
    msg << "not an alternate dual: ||sum Lambda_i^* Gamma_i - I||_F = " << cert.residual
        << " exceeds " << cert.tolerance;
    fail(ErrorCode::NotADual, msg.str());
  }
}

double sum_of_distances(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += frobenius_norm_sq(a[i] - b[i]);
  return acc;
}

std::vector<ComplexMatrix> times(const GFrame& f, const ComplexMatrix& m) {
  std::vector<ComplexMatrix> out;
  out.reserve(f.size());
  for (const auto& op : f.operators()) out.push_back(matmul(op, m));
  return out;
}

}  // namespace

double parseval_defect(const GFrame& g) {
  const auto s = frame_operator(g);
  return frobenius_norm(s.matrix - ComplexMatrix::identity(g.dim()));
}

void require_parseval(const GFrame& g) {
  const double defect = parseval_defect(g);
  const double limit = kParsevalTolerance * static_cast<double>(g.dim());
  if (!(defect <= limit)) {
    std::ostringstream msg;
    msg << "not a Parseval frame: ||S - I||_F = " << defect << " exceeds " << limit;
    fail(ErrorCode::NotParseval, msg.str());
  }
}

TwoSided parseval_weighted_energy(const ComplexMatrix& l, const GFrame& g) {
  if (l.cols() != g.dim()) {
    fail(ErrorCode::DimensionMismatch, "weighting operator has " + std::to_string(l.cols()) +
                                           " columns, frame dimension is " +
                                           std::to_string(g.dim()));
  }
  require_parseval(g);
  double energy = 0.0;
  for (const auto& op : g.operators()) energy += frobenius_norm_sq(matmul(l, adjoint(op)));
  return {energy, frobenius_norm_sq(l)};
}

TwoSided parseval_frobenius_budget(const GFrame& g) {
  require_parseval(g);
  return {frobenius_energy(g), static_cast<double>(g.dim())};
}

TwoSided power_trace_identity(const GFrame& g, double a) {
  const auto s = certified_frame_operator(g);
  const auto s_a = matrix_power(s.eig, a);
  double lhs = 0.0;
  for (const auto& op : g.operators()) lhs += frobenius_norm_sq(matmul(op, s_a));
  const double rhs = trace(matrix_power(s.eig, 2.0 * a + 1.0)).real();
  return {lhs, rhs};
}

ParsevalDecomposition parseval_approx_decomposition(const GFrame& lam, const GFrame& gam) {
  require_same_shape(lam, gam);
  const auto s = certified_frame_operator(lam);
  require_parseval(gam);

  const auto s_inv_half = matrix_power(s.eig, -0.5);
  const auto s_quarter = matrix_power(s.eig, 0.25);
  const auto s_inv_quarter = matrix_power(s.eig, -0.25);

  ParsevalDecomposition out{};
  out.total = frobenius_distance_sq(lam, gam);
  out.canonical_gap = sum_of_distances(lam.operators(), times(lam, s_inv_half));
  out.cross_term = sum_of_distances(times(gam, s_quarter), times(lam, s_inv_quarter));
  return out;
}

NajatiGap najati_gap(const GFrame& lam) {
  const auto s = certified_frame_operator(lam);
  const auto s_inv_half = matrix_power(s.eig, -0.5);
  NajatiGap out{};
  out.gap = sum_of_distances(lam.operators(), times(lam, s_inv_half));
  for (double lambda : s.eig.eigenvalues) {
    const double d = std::sqrt(lambda) - 1.0;
    out.closed_form += d * d;
  }
  return out;
}

DualDecomposition pointwise_dual_decomposition(const GFrame& lam, const GFrame& gam,
                                               std::span<const Complex> x) {
  require_same_shape(lam, gam);
  require_vector_length(x, lam.dim());
  const auto s = certified_frame_operator(lam);
  require_dual(lam, gam);

  const auto s_inv_x = matvec(matrix_power(s.eig, -1.0), x);
  DualDecomposition out{};
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const auto lx = matvec(lam[i], x);
    const auto gx = matvec(gam[i], x);
    const auto lsx = matvec(lam[i], s_inv_x);
    for (std::size_t r = 0; r < lx.size(); ++r) {
      out.total += std::norm(lx[r] - gx[r]);
      out.canonical += std::norm(lx[r] - lsx[r]);
      out.remainder += std::norm(lsx[r] - gx[r]);
    }
  }
  return out;
}

FrobeniusDualDecomposition frobenius_dual_decomposition(const GFrame& lam, const GFrame& gam) {
  require_same_shape(lam, gam);
  const auto s = certified_frame_operator(lam);
  require_dual(lam, gam);

  const auto canonical = times(lam, matrix_power(s.eig, -1.0));
  FrobeniusDualDecomposition out{};
  out.total = frobenius_distance_sq(lam, gam);
  out.canonical = sum_of_distances(lam.operators(), canonical);
  out.remainder = sum_of_distances(canonical, gam.operators());
  for (double lambda : s.eig.eigenvalues) out.closed_form += (lambda - 1.0) * (lambda - 1.0) / lambda;
  return out;
}

}  // namespace gframe
