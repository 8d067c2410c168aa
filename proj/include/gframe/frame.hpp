#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gframe/eigen.hpp"
#include "gframe/matrix.hpp"

namespace gframe {

/// A finite family of operators {Lambda_i : C^n -> C^{k_i}}.
///
/// Construction only enforces shape (non-empty, every operator has n
/// columns). Whether the family is actually a frame is decided by
/// validate_frame, so non-frames can be built and then rejected with a
/// diagnostic.
class GFrame {
 public:
  GFrame(std::size_t dim_h, std::vector<ComplexMatrix> operators);

  std::size_t dim() const noexcept { return dim_h_; }
  std::size_t size() const noexcept { return operators_.size(); }
  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  const ComplexMatrix& operator[](std::size_t i) const { return operators_[i]; }

  /// Output dimensions k_i, in order.
  std::vector<std::size_t> output_dims() const;

  bool operator==(const GFrame& other) const = default;

 private:
  std::size_t dim_h_;
  std::vector<ComplexMatrix> operators_;
};

/// S = sum_i Lambda_i^* Lambda_i together with its eigendecomposition.
struct FrameOperator {
  ComplexMatrix matrix;
  HermitianEigen eig;
};

/// Optimal frame bounds A = lambda_min(S), B = lambda_max(S), and the
/// nearly-Parseval rating epsilon = max(1 - A, B - 1).
struct FrameBounds {
  double lower;
  double upper;
  std::optional<double> epsilon;

  bool nearly_parseval() const noexcept { return epsilon && *epsilon < 1.0; }
};

FrameOperator frame_operator(const GFrame& f);

/// Throws NotAFrame (carrying lambda_min) unless lambda_min > kRankTolerance * lambda_max.
FrameBounds validate_frame(const GFrame& f);
FrameBounds validate_frame(const FrameOperator& s);

/// frame_operator + validate_frame in one step; the usual entry point for
/// operations that require a certified frame.
FrameOperator certified_frame_operator(const GFrame& f);

/// (Lambda_i x)_i
std::vector<ComplexVector> analysis_apply(const GFrame& f, std::span<const Complex> x);

/// sum_i Lambda_i^* y_i
ComplexVector synthesis_apply(const GFrame& f, std::span<const ComplexVector> y);

/// {Lambda_i S^{-1/2}}, the Parseval frame closest to f in aggregate Frobenius distance.
GFrame canonical_parseval(const GFrame& f);

/// {Lambda_i S^{-1}}
GFrame canonical_dual(const GFrame& f);

/// sum_i S^{-1} Lambda_i^* Lambda_i x
ComplexVector reconstruct(const GFrame& f, std::span<const Complex> x);

/// {Lambda_i M}
GFrame right_multiply(const GFrame& f, const ComplexMatrix& m);

/// sum_i ||Lambda_i||_F^2. Finite here by construction; for a certified
/// frame it lies in [A n, B n].
double frobenius_energy(const GFrame& f);

/// sum_i ||Lambda_i - Gamma_i||_F^2; throws DimensionMismatch unless shapes match.
double frobenius_distance_sq(const GFrame& lam, const GFrame& gam);

/// Same n, same operator count and same k_i sequence.
bool same_shape(const GFrame& a, const GFrame& b) noexcept;
void require_same_shape(const GFrame& a, const GFrame& b);

}  // namespace gframe
