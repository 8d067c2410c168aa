#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gframe/frame.hpp"
#include "gframe/rng.hpp"

namespace gframe {

// random_gframe redraws (on a fresh substream) at most this many times when
// a draw fails validate_frame.
inline constexpr int kGeneratorRetryCap = 16;

/// Operators with i.i.d. standard Gaussian real and imaginary entries,
/// shaped k_i x n. Requires n >= 1, every k_i >= 1 and sum k_i >= n.
GFrame random_gframe(std::size_t n, std::span<const std::size_t> counts, std::uint64_t seed);

/// canonical_parseval(random_gframe(n, counts, seed)).
GFrame random_parseval_gframe(std::size_t n, std::span<const std::size_t> counts,
                              std::uint64_t seed);

/// A frame whose operator has spectrum exactly {1 + eps, mu_2, ..., mu_{n-1}, 1 - eps},
/// interior mu_k uniform in (1 - eps, 1 + eps), with random eigenvectors.
/// Requires 0 <= eps < 1, and n >= 2 when eps > 0.
GFrame nearly_parseval_gframe(std::size_t n, std::span<const std::size_t> counts,
                              double epsilon, std::uint64_t seed);

/// Each f becomes the 1 x n operator x -> <x, f> (its row is conj(f)).
GFrame embed_vector_frame(std::span<const ComplexVector> vectors);

/// Haar-like unitary: modified Gram-Schmidt on a complex Gaussian matrix,
/// repeated once if ||Q*Q - I||_F > 1e-10.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

}  // namespace gframe
