#include "gframe/rng.hpp"

#include <cmath>
#include <numbers>

namespace gframe {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(seed ^ splitmix64(tag)) ^ index);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream))) {}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open(double lo, double hi) {
  const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double Rng::gaussian() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

ComplexMatrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (auto& e : m.entries()) e = complex_gaussian();
  return m;
}

ComplexVector Rng::gaussian_vector(std::size_t n) {
  ComplexVector v(n);
  for (auto& e : v) e = complex_gaussian();
  return v;
}

}  // namespace gframe
