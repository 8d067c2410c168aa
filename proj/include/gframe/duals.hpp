#pragma once

#include <cstdint>
#include <optional>

#include "gframe/frame.hpp"

namespace gframe {

// Default dual tolerance is kDualTolerance * n.
inline constexpr double kDualTolerance = 1e-8;

struct DualCertificate {
  double residual;   // ||sum_i Lambda_i^* Gamma_i - I||_F
  double tolerance;
  bool passed;       // residual <= tolerance
};

DualCertificate verify_alternate_dual(const GFrame& lam, const GFrame& gam,
                                      std::optional<double> tolerance = std::nullopt);

/// Gamma_i = Lambda_i S^{-1} + Theta_i with
/// Theta_i = Delta_i - Lambda_i S^{-1} sum_j Lambda_j^* Delta_j,
/// where each Delta_i is Gaussian rescaled to ||Delta_i||_F == magnitude.
/// sum_i Lambda_i^* Theta_i vanishes identically, so the result is a dual.
/// magnitude == 0 reproduces canonical_dual exactly.
GFrame random_alternate_dual(const GFrame& lam, double magnitude, std::uint64_t seed);

struct ProximityBound {
  double gap;
  double bound;
};

/// gap = sum ||Lambda_i - Lambda_i S^{-1/2}||_F^2, bound = n (1 - sqrt(1 - eps))^2.
/// Throws EpsilonOutOfRange unless the frame's epsilon is below 1.
ProximityBound parseval_proximity_bound(const GFrame& g);

/// gap = sum ||Lambda_i - Lambda_i S^{-1}||_F^2 (the canonical dual is the
/// witness), bound = n eps^2 / (1 - eps).
ProximityBound dual_proximity_bound(const GFrame& g);

/// n rank-one operators sqrt(1 - eps) e_k^T. S = (1 - eps) I, so both
/// proximity bounds hold with equality.
GFrame extremal_frame(std::size_t n, double epsilon);

}  // namespace gframe
