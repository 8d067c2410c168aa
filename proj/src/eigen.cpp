#include "gframe/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gframe/error.hpp"

namespace gframe {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) acc += std::norm(a(i, j));
    }
  }
  return std::sqrt(acc);
}

// One complex Jacobi rotation G = diag(1, e^{-i phi}) * R(c, s) acting on the
// (p, q) plane, chosen so that (G* A G)_pq == 0.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;

  const Complex phase = apq / magnitude;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * magnitude);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex g_pp = c;
  const Complex g_pq = s;
  const Complex g_qp = -s * std::conj(phase);
  const Complex g_qq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g_pp + akq * g_qp;
    a(k, q) = akp * g_pq + akq * g_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * g_pp + vkq * g_qp;
    v(k, q) = vkp * g_pq + vkq * g_qq;
  }
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "hermitian_eig: input is not square");
  const double scale = frobenius_norm(m);
  const double defect = hermitian_defect(m);
  if (defect > kHermitianTolerance * (1.0 + scale)) {
    std::ostringstream msg;
    msg << "hermitian_eig: ||M - M*||_F = " << defect << " exceeds tolerance";
    fail(ErrorCode::NotHermitian, msg.str());
  }

  const std::size_t n = m.rows();
  ComplexMatrix a = symmetrize(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiOffDiagonalTolerance * frobenius_norm(a);

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kJacobiSweepCap && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "hermitian_eig: off-diagonal norm " << off_diagonal_norm(a) << " above " << threshold
        << " after " << kJacobiSweepCap << " sweeps";
    fail(ErrorCode::NoConvergence, msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    out.eigenvalues[col] = a(order[col], order[col]).real();
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, order[col]);
  }
  return out;
}

bool is_positive_definite(const HermitianEigen& eig) noexcept {
  return eig.lambda_max() > 0.0 && eig.lambda_min() > kRankTolerance * eig.lambda_max();
}

ComplexMatrix matrix_power(const HermitianEigen& eig, double a) {
  if (!is_positive_definite(eig)) {
    std::ostringstream msg;
    msg << "matrix_power: lambda_min = " << eig.lambda_min() << " is not above "
        << kRankTolerance << " * lambda_max (" << eig.lambda_max() << ")";
    throw Error(ErrorCode::NotPositiveDefinite, msg.str(), eig.lambda_min());
  }
  const std::size_t n = eig.eigenvalues.size();
  const ComplexMatrix& u = eig.eigenvectors;
  std::vector<double> powered(n);
  for (std::size_t k = 0; k < n; ++k) powered[k] = std::pow(eig.eigenvalues[k], a);

  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += u(i, k) * powered[k] * std::conj(u(j, k));
      if (i == j) {
        out(i, i) = acc.real();
      } else {
        out(i, j) = acc;
        out(j, i) = std::conj(acc);
      }
    }
  }
  return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, double a) {
  return matrix_power(hermitian_eig(m), a);
}

}  // namespace gframe
