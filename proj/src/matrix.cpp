#include "gframe/matrix.hpp"

#include <cmath>
#include <string>

#include "gframe/error.hpp"

namespace gframe {

namespace {

void require_positive_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    fail(ErrorCode::InvalidArgument, "matrix dimensions must be positive, got " +
                                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::DimensionMismatch,
         std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
             " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_() {
  require_positive_shape(rows, cols);
  entries_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive_shape(rows, cols);
  if (entries_.size() != rows * cols) {
    fail(ErrorCode::DimensionMismatch, "entry count " + std::to_string(entries_.size()) +
                                           " does not match " + std::to_string(rows) + "x" +
                                           std::to_string(cols));
  }
  if (!all_finite(entries_)) fail(ErrorCode::InvalidArgument, "matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()), entries_() {
  require_positive_shape(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!all_finite(entries_)) fail(ErrorCode::InvalidArgument, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::DimensionMismatch,
         "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) {
    fail(ErrorCode::DimensionMismatch, "adjoint_times: row counts " + std::to_string(a.rows()) +
                                           " and " + std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < a.rows(); ++k) acc += std::conj(a(k, i)) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexVector matvec(const ComplexMatrix& m, std::span<const Complex> x) {
  if (x.size() != m.cols()) {
    fail(ErrorCode::DimensionMismatch, "matvec: vector length " + std::to_string(x.size()) +
                                           " vs " + std::to_string(m.cols()) + " columns");
  }
  ComplexVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc{};
    for (std::size_t k = 0; k < m.cols(); ++k) acc += m(i, k) * x[k];
    y[i] = acc;
  }
  return y;
}

double frobenius_norm_sq(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const auto& e : m.entries()) acc += std::norm(e);
  return acc;
}

double frobenius_norm(const ComplexMatrix& m) { return std::sqrt(frobenius_norm_sq(m)); }

Complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "trace of a non-square matrix");
  Complex acc{};
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "Hermitian check on a non-square matrix");
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) acc += std::norm(m(i, j) - std::conj(m(j, i)));
  }
  return std::sqrt(acc);
}

ComplexMatrix symmetrize(const ComplexMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "symmetrize of a non-square matrix");
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex upper = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = upper;
      out(j, i) = std::conj(upper);
    }
  }
  return out;
}

// Linear in the first argument.
Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) fail(ErrorCode::DimensionMismatch, "inner product length mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

double norm_sq(std::span<const Complex> x) {
  double acc = 0.0;
  for (const auto& v : x) acc += std::norm(v);
  return acc;
}

bool all_finite(std::span<const Complex> values) noexcept {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace gframe
