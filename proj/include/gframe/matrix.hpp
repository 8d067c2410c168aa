#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gframe {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix, row-major. Dimensions are always positive.
///
/// Entries handed to the constructors must be finite; arithmetic on finite
/// inputs is the caller's responsibility past that point.
class ComplexMatrix {
 public:
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Textbook product: each entry accumulated over k in ascending order.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// adjoint(a) * b without materializing the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexVector matvec(const ComplexMatrix& m, std::span<const Complex> x);

/// Sum of squared moduli of all entries.
double frobenius_norm_sq(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

Complex trace(const ComplexMatrix& m);

/// ||m - adjoint(m)||_F
double hermitian_defect(const ComplexMatrix& m);

/// (m + m*) / 2, with an exactly real diagonal.
ComplexMatrix symmetrize(const ComplexMatrix& m);

Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm_sq(std::span<const Complex> x);

bool all_finite(std::span<const Complex> values) noexcept;

}  // namespace gframe
