#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "gframe/matrix.hpp"

namespace gframe {

/// Seedable random stream with a portable output sequence.
///
/// The engine is std::mt19937_64, whose output is fixed by the standard.
/// It is seeded with splitmix64(seed ^ splitmix64(stream)), so every
/// (seed, stream) pair names an independent, reproducible substream.
/// Uniforms take the top 53 bits; Gaussians come from Box-Muller, using
/// both variates of each pair in order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (lo, hi).
  double uniform_open(double lo, double hi);
  double gaussian();
  /// Independent standard Gaussian real and imaginary parts.
  Complex complex_gaussian();

  ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);
  ComplexVector gaussian_vector(std::size_t n);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Deterministic child seed for (seed, tag, index); used to give each
/// randomized trial its own substream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) noexcept;

}  // namespace gframe
