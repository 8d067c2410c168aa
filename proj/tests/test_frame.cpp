#include "doctest.h"

#include <array>
#include <cmath>

#include "gframe/frame.hpp"
#include "gframe/generators.hpp"
#include "gframe/identities.hpp"
#include "gframe/rng.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gframe;
using gframe::test::code_of;

namespace {

GFrame basis_frame(std::size_t n) {
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix row(1, n);
    row(0, k) = 1.0;
    ops.push_back(row);
  }
  return GFrame(n, ops);
}

// S = diag(2, 1)
GFrame diag21_frame() {
  return GFrame(2, {ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}, ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}});
}

double dense_diff(const oracle::Dense& a, const ComplexMatrix& b) { return oracle::max_abs_diff(a, b); }

double vec_dist(const ComplexVector& a, const ComplexVector& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc);
}

std::vector<GFrame> random_frames(std::uint64_t seed, int count) {
  std::vector<GFrame> out;
  Rng pick(seed);
  for (int t = 0; t < count; ++t) {
    const std::size_t n = 1 + pick.next_u64() % 8;
    std::vector<std::size_t> counts(1 + pick.next_u64() % 4);
    std::size_t total = 0;
    for (auto& k : counts) total += k = 1 + pick.next_u64() % 4;
    counts.back() += total < n + 1 ? n + 1 - total : 0;
    out.push_back(random_gframe(n, counts, derive_seed(seed, 1, t)));
  }
  return out;
}

}  // namespace

TEST_CASE("GFrame construction") {
  CHECK(code_of([] { GFrame(2, {}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { GFrame(2, {ComplexMatrix(1, 3)}); }) == ErrorCode::DimensionMismatch);
  const GFrame f(3, {ComplexMatrix(2, 3), ComplexMatrix(1, 3)});
  CHECK(f.output_dims() == std::vector<std::size_t>{2, 1});
  CHECK(f.size() == 2);
}

TEST_CASE("frame_operator") {
  CHECK(frame_operator(GFrame(2, {ComplexMatrix::identity(2)})).matrix == ComplexMatrix::identity(2));
  CHECK(frame_operator(basis_frame(2)).matrix == ComplexMatrix::identity(2));
  const std::array<double, 2> expected{2.0, 1.0};
  CHECK(frame_operator(diag21_frame()).matrix == ComplexMatrix::diagonal(expected));

  for (const auto& f : random_frames(101, 10)) {
    CHECK(dense_diff(oracle::frame_operator_entrywise(f), frame_operator(f).matrix) <= 1e-12 * (1.0 + frobenius_energy(f)));
  }
}

TEST_CASE("validate_frame") {
  SUBCASE("orthonormal basis") {
    const auto b = validate_frame(basis_frame(3));
    CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-15));
    REQUIRE(b.epsilon);
    CHECK(*b.epsilon <= 1e-15);
    CHECK(b.nearly_parseval());
  }
  SUBCASE("diag(2,1)") {
    const auto b = validate_frame(diag21_frame());
    CHECK(b.lower == 1.0);
    CHECK(b.upper == 2.0);
    CHECK(*b.epsilon == 1.0);
    CHECK_FALSE(b.nearly_parseval());
  }
  SUBCASE("diag(1.5, 0.8) rated epsilon 0.5") {
    const std::array<double, 2> d{std::sqrt(1.5), std::sqrt(0.8)};
    const GFrame f = right_multiply(random_parseval_gframe(2, std::array<std::size_t, 2>{2, 2}, 5),
                                    ComplexMatrix::diagonal(d));
    const auto b = validate_frame(f);
    CHECK(b.lower == doctest::Approx(0.8).epsilon(1e-10));
    CHECK(b.upper == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(*b.epsilon == doctest::Approx(0.5).epsilon(1e-10));
  }
  SUBCASE("rank deficient families carry lambda_min") {
    try {
      validate_frame(GFrame(2, {ComplexMatrix{{1.0, 0.0}}}));
      FAIL("expected NotAFrame");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAFrame);
      REQUIRE(e.lambda_min());
      CHECK(std::abs(*e.lambda_min()) <= 1e-15);
    }
  }
  SUBCASE("zero operators are fine when S stays definite") {
    const GFrame f(2, {ComplexMatrix(3, 2), ComplexMatrix::identity(2)});
    CHECK(validate_frame(f).lower == 1.0);
  }
  SUBCASE("bounds are attained on the cached eigenvectors") {
    for (const auto& f : random_frames(102, 10)) {
      const auto s = frame_operator(f);
      const auto b = validate_frame(s);
      const auto& u = s.eig.eigenvectors;
      const std::size_t n = f.dim();
      ComplexVector top(n), bottom(n);
      for (std::size_t i = 0; i < n; ++i) {
        top[i] = u(i, 0);
        bottom[i] = u(i, n - 1);
      }
      CHECK(std::abs(oracle::analysis_energy(f, top) - b.upper) <= 1e-9 * (1.0 + b.upper));
      CHECK(std::abs(oracle::analysis_energy(f, bottom) - b.lower) <= 1e-9 * (1.0 + b.upper));
    }
  }
}

TEST_CASE("analysis and synthesis") {
  const auto basis = basis_frame(2);
  SUBCASE("trivial cases") {
    const ComplexVector zero(2);
    for (const auto& y : analysis_apply(basis, zero)) CHECK(y == ComplexVector(1));
    const ComplexVector e1{1.0, 0.0};
    const auto coeffs = analysis_apply(basis, e1);
    CHECK(coeffs[0][0] == Complex(1.0));
    CHECK(coeffs[1][0] == Complex(0.0));
    CHECK(synthesis_apply(basis, coeffs) == e1);
    const std::vector<ComplexVector> zeros(2, ComplexVector(1));
    CHECK(synthesis_apply(basis, zeros) == zero);
  }
  SUBCASE("length mismatches") {
    CHECK(code_of([&] { analysis_apply(basis, ComplexVector(3)); }) == ErrorCode::DimensionMismatch);
    const std::vector<ComplexVector> short_y(1, ComplexVector(1));
    CHECK(code_of([&] { synthesis_apply(basis, short_y); }) == ErrorCode::DimensionMismatch);
    const std::vector<ComplexVector> wide_y(2, ComplexVector(2));
    CHECK(code_of([&] { synthesis_apply(basis, wide_y); }) == ErrorCode::DimensionMismatch);
  }
  SUBCASE("energy, adjointness and synthesis of analysis") {
    Rng rng(103);
    for (const auto& f : random_frames(104, 15)) {
      const auto s = frame_operator(f).matrix;
      const auto x = rng.gaussian_vector(f.dim());
      const double energy = oracle::analysis_energy(f, x);
      const double quad = std::real(oracle::dot(oracle::mat_vec(s, x), x));
      CHECK(std::abs(energy - quad) <= 1e-10 * (1.0 + oracle::vec_norm_sq(x)) * (1.0 + frobenius_norm(s)));

      std::vector<ComplexVector> y;
      for (std::size_t k : f.output_dims()) y.push_back(rng.gaussian_vector(k));
      const auto lam_x = analysis_apply(f, x);
      Complex rhs{};
      for (std::size_t i = 0; i < y.size(); ++i) rhs += oracle::dot(y[i], lam_x[i]);
      const Complex lhs = oracle::dot(synthesis_apply(f, y), x);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));

      CHECK(vec_dist(synthesis_apply(f, lam_x), oracle::mat_vec(s, x)) <=
            1e-10 * (1.0 + std::sqrt(oracle::vec_norm_sq(x))) * (1.0 + frobenius_norm(s)));
    }
  }
}

TEST_CASE("canonical_parseval") {
  SUBCASE("Parseval input is a fixed point") {
    const auto g = random_parseval_gframe(4, std::array<std::size_t, 3>{2, 2, 2}, 9);
    CHECK(frobenius_distance_sq(canonical_parseval(g), g) <= 1e-18);
  }
  SUBCASE("S = diag(4,1) scales by diag(1/2, 1)") {
    const GFrame f(2, {ComplexMatrix{{2.0, 0.0}}, ComplexMatrix{{0.0, 1.0}}});
    const auto out = canonical_parseval(f);
    CHECK(std::abs(out[0](0, 0) - 1.0) <= 1e-15);
    CHECK(std::abs(out[1](0, 1) - 1.0) <= 1e-15);
    CHECK(std::abs(out[0](0, 1)) <= 1e-15);
  }
  SUBCASE("random frames become Parseval with budget n") {
    for (const auto& f : random_frames(105, 15)) {
      const auto g = canonical_parseval(f);
      const auto n = static_cast<double>(f.dim());
      CHECK(frobenius_norm(frame_operator(g).matrix - ComplexMatrix::identity(f.dim())) <= 1e-8);
      double budget = 0.0;
      for (const auto& op : g.operators()) budget += oracle::column_sum_frobenius(op);
      CHECK(std::abs(budget - n) <= 1e-8 * n);
    }
  }
  SUBCASE("non-frames are rejected") {
    CHECK(code_of([] { canonical_parseval(GFrame(2, {ComplexMatrix{{1.0, 1.0}}})); }) ==
          ErrorCode::NotAFrame);
  }
}

TEST_CASE("canonical_dual") {
  SUBCASE("Parseval input is a fixed point") {
    const auto g = random_parseval_gframe(3, std::array<std::size_t, 2>{2, 2}, 10);
    CHECK(frobenius_distance_sq(canonical_dual(g), g) <= 1e-18);
  }
  SUBCASE("S = diag(2,1) scales by diag(1/2, 1)") {
    const auto f = diag21_frame();
    const auto d = canonical_dual(f);
    const std::array<double, 2> scale{0.5, 1.0};
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto expected = oracle::naive_product(oracle::to_dense(f[i]),
                                                  oracle::to_dense(ComplexMatrix::diagonal(scale)));
      CHECK(oracle::max_abs_diff(expected, d[i]) <= 1e-15);
    }
  }
  SUBCASE("sum of Lambda_i^* Lambda_i S^-1 assembles to I") {
    for (const auto& f : random_frames(106, 15)) {
      const auto d = canonical_dual(f);
      const std::size_t n = f.dim();
      oracle::Dense sum(n, std::vector<Complex>(n));
      for (std::size_t i = 0; i < f.size(); ++i) {
        const auto term = oracle::naive_product(oracle::to_dense(adjoint(f[i])), oracle::to_dense(d[i]));
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) sum[r][c] += term[r][c];
        }
      }
      CHECK(oracle::max_abs_diff(sum, ComplexMatrix::identity(n)) <= 1e-9);
    }
  }
}

TEST_CASE("reconstruct") {
  const auto basis = basis_frame(3);
  CHECK(reconstruct(basis, ComplexVector(3)) == ComplexVector(3));
  Rng rng(107);
  const auto x = rng.gaussian_vector(3);
  CHECK(vec_dist(reconstruct(basis, x), x) <= 1e-12);
  for (const auto& f : random_frames(108, 20)) {
    const auto v = rng.gaussian_vector(f.dim());
    CHECK(vec_dist(reconstruct(f, v), v) <= 1e-8 * std::sqrt(oracle::vec_norm_sq(v)));
  }
  CHECK(code_of([] { reconstruct(GFrame(2, {ComplexMatrix{{1.0, 0.0}}}), ComplexVector(2)); }) ==
        ErrorCode::NotAFrame);
}

TEST_CASE("frobenius_energy lies in [A n, B n]") {
  for (const auto& f : random_frames(109, 20)) {
    const auto b = validate_frame(f);
    const double e = frobenius_energy(f);
    const double n = static_cast<double>(f.dim());
    CHECK(std::isfinite(e));
    CHECK(e >= b.lower * n * (1.0 - 1e-12));
    CHECK(e <= b.upper * n * (1.0 + 1e-12));
  }
}

TEST_CASE("shape helpers") {
  const auto a = random_gframe(3, std::array<std::size_t, 2>{2, 2}, 1);
  const auto b = random_gframe(3, std::array<std::size_t, 2>{2, 2}, 2);
  const auto c = random_gframe(3, std::array<std::size_t, 2>{1, 3}, 3);
  CHECK(same_shape(a, b));
  CHECK_FALSE(same_shape(a, c));
  CHECK(frobenius_distance_sq(a, a) == 0.0);
  CHECK(code_of([&] { frobenius_distance_sq(a, c); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("vector frames") {
  const double r = std::sqrt(3.0) / 2.0;
  const std::vector<ComplexVector> mercedes{{0.0, 1.0}, {-r, -0.5}, {r, -0.5}};
  const auto f = embed_vector_frame(mercedes);
  const auto b = validate_frame(f);
  CHECK(b.lower == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(b.upper == doctest::Approx(1.5).epsilon(1e-14));

  Rng rng(110);
  std::vector<ComplexVector> vecs;
  for (int i = 0; i < 7; ++i) vecs.push_back(rng.gaussian_vector(4));
  const auto g = embed_vector_frame(vecs);
  const auto s = frame_operator(g).matrix;
  oracle::Dense outer(4, std::vector<Complex>(4));
  for (const auto& v : vecs) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) outer[i][j] += v[i] * std::conj(v[j]);
    }
  }
  CHECK(oracle::max_abs_diff(outer, s) <= 1e-12 * (1.0 + frobenius_norm(s)));

  const auto x = rng.gaussian_vector(4);
  double classical = 0.0;
  for (const auto& v : vecs) classical += std::norm(oracle::dot(x, v));
  CHECK(std::abs(classical - oracle::analysis_energy(g, x)) <= 1e-12 * (1.0 + classical));

  const std::vector<ComplexVector> lone{{1.0, 0.0}};
  CHECK(code_of([&] { validate_frame(embed_vector_frame(lone)); }) == ErrorCode::NotAFrame);
  CHECK(code_of([] { embed_vector_frame({}); }) == ErrorCode::InvalidArgument);
  const std::vector<ComplexVector> ragged{{1.0, 0.0}, {1.0}};
  CHECK(code_of([&] { embed_vector_frame(ragged); }) == ErrorCode::DimensionMismatch);
}
