#include "gframe/frame.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "gframe/error.hpp"

namespace gframe {

GFrame::GFrame(std::size_t dim_h, std::vector<ComplexMatrix> operators)
    : dim_h_(dim_h), operators_(std::move(operators)) {
  if (dim_h_ == 0) fail(ErrorCode::InvalidArgument, "frame dimension must be positive");
  if (operators_.empty()) fail(ErrorCode::InvalidArgument, "frame needs at least one operator");
  for (std::size_t i = 0; i < operators_.size(); ++i) {
    if (operators_[i].cols() != dim_h_) {
      fail(ErrorCode::DimensionMismatch, "operator " + std::to_string(i) + " has " +
                                             std::to_string(operators_[i].cols()) +
                                             " columns, expected " + std::to_string(dim_h_));
    }
  }
}

std::vector<std::size_t> GFrame::output_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(operators_.size());
  for (const auto& op : operators_) dims.push_back(op.rows());
  return dims;
}

FrameOperator frame_operator(const GFrame& f) {
  ComplexMatrix s(f.dim(), f.dim());
  for (const auto& op : f.operators()) s += adjoint_times(op, op);
  s = symmetrize(s);
  auto eig = hermitian_eig(s);
  return FrameOperator{std::move(s), std::move(eig)};
}

FrameBounds validate_frame(const FrameOperator& s) {
  if (!is_positive_definite(s.eig)) {
    std::ostringstream msg;
    msg << "not a frame: lambda_min(S) = " << s.eig.lambda_min()
        << " is not above " << kRankTolerance << " * lambda_max(S) = " << s.eig.lambda_max();
    throw Error(ErrorCode::NotAFrame, msg.str(), s.eig.lambda_min());
  }
  const double a = s.eig.lambda_min();
  const double b = s.eig.lambda_max();
  return FrameBounds{a, b, std::max(1.0 - a, b - 1.0)};
}

FrameBounds validate_frame(const GFrame& f) { return validate_frame(frame_operator(f)); }

FrameOperator certified_frame_operator(const GFrame& f) {
  auto s = frame_operator(f);
  validate_frame(s);
  return s;
}

std::vector<ComplexVector> analysis_apply(const GFrame& f, std::span<const Complex> x) {
  if (x.size() != f.dim()) {
    fail(ErrorCode::DimensionMismatch, "analysis: vector length " + std::to_string(x.size()) +
                                           ", frame dimension " + std::to_string(f.dim()));
  }
  std::vector<ComplexVector> out;
  out.reserve(f.size());
  for (const auto& op : f.operators()) out.push_back(matvec(op, x));
  return out;
}

ComplexVector synthesis_apply(const GFrame& f, std::span<const ComplexVector> y) {
  if (y.size() != f.size()) {
    fail(ErrorCode::DimensionMismatch, "synthesis: " + std::to_string(y.size()) +
                                           " components for " + std::to_string(f.size()) +
                                           " operators");
  }
  ComplexVector out(f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& op = f[i];
    if (y[i].size() != op.rows()) {
      fail(ErrorCode::DimensionMismatch, "synthesis: component " + std::to_string(i) +
                                             " has length " + std::to_string(y[i].size()) +
                                             ", expected " + std::to_string(op.rows()));
    }
    for (std::size_t c = 0; c < f.dim(); ++c) {
      Complex acc{};
      for (std::size_t r = 0; r < op.rows(); ++r) acc += std::conj(op(r, c)) * y[i][r];
      out[c] += acc;
    }
  }
  return out;
}

GFrame right_multiply(const GFrame& f, const ComplexMatrix& m) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(f.size());
  for (const auto& op : f.operators()) ops.push_back(matmul(op, m));
  return GFrame(m.cols(), std::move(ops));
}

GFrame canonical_parseval(const GFrame& f) {
  const auto s = certified_frame_operator(f);
  return right_multiply(f, matrix_power(s.eig, -0.5));
}

GFrame canonical_dual(const GFrame& f) {
  const auto s = certified_frame_operator(f);
  return right_multiply(f, matrix_power(s.eig, -1.0));
}

ComplexVector reconstruct(const GFrame& f, std::span<const Complex> x) {
  const auto s = certified_frame_operator(f);
  const auto s_inv = matrix_power(s.eig, -1.0);
  if (x.size() != f.dim()) {
    fail(ErrorCode::DimensionMismatch, "reconstruct: vector length " + std::to_string(x.size()) +
                                           ", frame dimension " + std::to_string(f.dim()));
  }
  ComplexVector out(f.dim());
  for (const auto& op : f.operators()) {
    const auto coeffs = matvec(op, x);
    ComplexVector back(f.dim());
    for (std::size_t c = 0; c < f.dim(); ++c) {
      for (std::size_t r = 0; r < op.rows(); ++r) back[c] += std::conj(op(r, c)) * coeffs[r];
    }
    const auto term = matvec(s_inv, back);
    for (std::size_t c = 0; c < f.dim(); ++c) out[c] += term[c];
  }
  return out;
}

double frobenius_energy(const GFrame& f) {
  double acc = 0.0;
  for (const auto& op : f.operators()) acc += frobenius_norm_sq(op);
  return acc;
}

bool same_shape(const GFrame& a, const GFrame& b) noexcept {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].rows() != b[i].rows()) return false;
  }
  return true;
}

void require_same_shape(const GFrame& a, const GFrame& b) {
  if (!same_shape(a, b)) {
    fail(ErrorCode::DimensionMismatch,
         "frames differ in shape (dimension, operator count or output dimensions)");
  }
}

double frobenius_distance_sq(const GFrame& lam, const GFrame& gam) {
  require_same_shape(lam, gam);
  double acc = 0.0;
  for (std::size_t i = 0; i < lam.size(); ++i) acc += frobenius_norm_sq(lam[i] - gam[i]);
  return acc;
}

}  // namespace gframe
