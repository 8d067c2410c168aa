#pragma once

#include <cmath>
#include <span>

#include "gframe/frame.hpp"

// Executable forms of the Frobenius-norm identities for finite g-frames.
//
// Every operation evaluates each side (or each term) from its own
// definition and returns all of them; tolerances are applied by callers.

namespace gframe {

// A family is accepted as Parseval when ||S - I||_F <= kParsevalTolerance * n.
inline constexpr double kParsevalTolerance = 1e-6;

double parseval_defect(const GFrame& g);
void require_parseval(const GFrame& g);

struct TwoSided {
  double lhs;
  double rhs;

  double residual() const noexcept { return std::abs(lhs - rhs); }
};

/// sum_i ||L Gamma_i^*||_F^2 for a Parseval family, paired with the closed
/// form ||L||_F^2. L maps C^n into any space, so L.cols() must equal n.
TwoSided parseval_weighted_energy(const ComplexMatrix& l, const GFrame& g);

/// sum_i ||Gamma_i||_F^2 against n.
TwoSided parseval_frobenius_budget(const GFrame& g);

/// lhs = sum_i ||Lambda_i S^a||_F^2 operator by operator,
/// rhs = Tr(S^{2a+1}) through matrix_power.
TwoSided power_trace_identity(const GFrame& g, double a);

/// total         = sum ||Lambda_i - Gamma_i||_F^2
/// canonical_gap = sum ||Lambda_i - Lambda_i S^{-1/2}||_F^2
/// cross_term    = sum ||Gamma_i S^{1/4} - Lambda_i S^{-1/4}||_F^2
struct ParsevalDecomposition {
  double total;
  double canonical_gap;
  double cross_term;

  double residual() const noexcept { return std::abs(total - canonical_gap - cross_term); }
};

ParsevalDecomposition parseval_approx_decomposition(const GFrame& lam, const GFrame& gam);

/// Distance from a frame to its canonical Parseval frame, by definition and
/// by the spectral closed form sum_k (sqrt(lambda_k) - 1)^2.
struct NajatiGap {
  double gap;
  double closed_form;

  double residual() const noexcept { return std::abs(gap - closed_form); }
};

NajatiGap najati_gap(const GFrame& lam);

/// total     = sum ||Lambda_i x - Gamma_i x||^2
/// canonical = sum ||Lambda_i x - Lambda_i S^{-1} x||^2
/// remainder = sum ||Lambda_i S^{-1} x - Gamma_i x||^2
struct DualDecomposition {
  double total;
  double canonical;
  double remainder;

  double residual() const noexcept { return std::abs(total - canonical - remainder); }
};

/// Requires gam to pass verify_alternate_dual against lam (NotADual otherwise).
DualDecomposition pointwise_dual_decomposition(const GFrame& lam, const GFrame& gam,
                                               std::span<const Complex> x);

/// Frobenius version of the dual decomposition; closed_form is
/// sum_k (lambda_k - 1)^2 / lambda_k and should match canonical.
struct FrobeniusDualDecomposition : DualDecomposition {
  double closed_form;
};

FrobeniusDualDecomposition frobenius_dual_decomposition(const GFrame& lam, const GFrame& gam);

}  // namespace gframe
