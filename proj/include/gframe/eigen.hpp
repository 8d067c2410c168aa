#pragma once

#include <vector>

#include "gframe/matrix.hpp"

namespace gframe {

// Cyclic Jacobi stops once the off-diagonal Frobenius mass drops below
// kJacobiOffDiagonalTolerance * ||M||_F, or fails after kJacobiSweepCap sweeps.
inline constexpr double kJacobiOffDiagonalTolerance = 1e-13;
inline constexpr int kJacobiSweepCap = 64;

// Inputs with ||M - M*||_F above this (times 1 + ||M||_F) are rejected.
inline constexpr double kHermitianTolerance = 1e-8;

// Fractional powers require lambda_min > kRankTolerance * lambda_max.
inline constexpr double kRankTolerance = 1e-10;

struct HermitianEigen {
  std::vector<double> eigenvalues;  // non-increasing
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]

  double lambda_max() const { return eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.back(); }
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is symmetrized to (M + M*)/2 first. Eigenvalues come back in
/// non-increasing order; ties keep the order in which the sweeps left them.
/// Throws NotSquare, NotHermitian or NoConvergence.
HermitianEigen hermitian_eig(const ComplexMatrix& m);

/// M^a for Hermitian positive definite M, via the spectral decomposition.
/// Throws NotPositiveDefinite (carrying lambda_min) when
/// lambda_min <= kRankTolerance * lambda_max.
ComplexMatrix matrix_power(const ComplexMatrix& m, double a);
ComplexMatrix matrix_power(const HermitianEigen& eig, double a);

/// The positive-definiteness gate used by matrix_power.
bool is_positive_definite(const HermitianEigen& eig) noexcept;

}  // namespace gframe
