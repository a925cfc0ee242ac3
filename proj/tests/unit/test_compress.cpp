#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "weierstrass/compress.hpp"
#include "weierstrass/signals.hpp"

using namespace weierstrass;
using cd = std::complex<double>;

namespace {

Eigen::VectorXcd iota(Index n) {
  Eigen::VectorXcd c(n);
  for (Index i = 0; i < n; ++i) c[i] = cd(static_cast<double>(i + 1), 0.5);
  return c;
}

}  // namespace

TEST_CASE("truncate_coeffs") {
  const Eigen::VectorXcd c = iota(8);

  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(8);
  expected[0] = c[0];
  expected[1] = c[1];
  expected[7] = c[7];
  CHECK(truncate_coeffs(c, 2) == expected);

  CHECK(truncate_coeffs(c, 5) == c);

  Eigen::VectorXcd dc = Eigen::VectorXcd::Zero(8);
  dc[0] = c[0];
  CHECK(truncate_coeffs(c, 1) == dc);

  CHECK(max_kept_terms(8) == 5);
  CHECK(max_kept_terms(7) == 4);
  CHECK(truncate_coeffs(iota(7), 4) == iota(7));
  CHECK_THROWS_AS(truncate_coeffs(c, 0), std::out_of_range);
  CHECK_THROWS_AS(truncate_coeffs(c, 6), std::out_of_range);
  CHECK_THROWS_AS(truncate_coeffs(iota(7), 5), std::out_of_range);
}

TEST_CASE("truncation properties") {
  std::mt19937_64 rng(41);
  for (Index n : {1, 2, 7, 8, 33, 64}) {
    const Eigen::VectorXcd c = oracle::random_complex(n, rng);
    Eigen::VectorXcd previous;
    for (Index k = 1; k <= max_kept_terms(n); ++k) {
      const Eigen::VectorXcd t = truncate_coeffs(c, k);
      CHECK(truncate_coeffs(t, k) == t);
      for (Index i = 0; i < n; ++i) {
        const bool kept = i < k || i > n - k;
        CHECK(t[i] == (kept ? c[i] : cd(0.0)));
        // keep-set grows with k
        if (k > 1 && previous[i] != cd(0.0)) CHECK(t[i] == c[i]);
      }
      previous = t;
    }
  }
}

TEST_CASE("approximate") {
  const Index n = 64;
  const TransformPlan plan = build_plan(n, 0.5);
  const DataVector b = generate({SignalKind::low_high_sine, n});

  SUBCASE("keeping every term recovers the data") {
    const CompressionResult r = approximate(plan, b, n / 2 + 1);
    CHECK(r.error_norm <= 1e-9 * b.values.norm());
  }
  SUBCASE("constant data survive k = 1") {
    for (double a : {0.0, 0.3, 0.9}) {
      const CompressionResult r = approximate(build_plan(n, a), DataVector::real(Eigen::VectorXd::Ones(n)), 1);
      CHECK(r.error_norm <= 1e-10);
    }
  }
  SUBCASE("result invariants") {
    const CompressionResult r = approximate(plan, b, 6);
    CHECK(r.k == 6);
    CHECK(r.c_trunc.segment(6, n - 11).isZero(0.0));
    CHECK(r.error_norm == doctest::Approx(r.error_vector.norm()));
    CHECK(r.reconstruction.imag().isZero(0.0));
    CHECK((r.error_vector - (r.reconstruction - b.values)).isZero(0.0));
  }
  SUBCASE("complex data keep the imaginary part") {
    std::mt19937_64 rng(43);
    const DataVector z = DataVector::complex(oracle::random_complex(n, rng));
    const CompressionResult r = approximate(plan, z, 10);
    CHECK(r.reconstruction.imag().norm() > 0.0);
    CHECK(r.discarded_imag_norm == 0.0);
  }
  SUBCASE("a = 0 matches an independent DFT pipeline") {
    const Index big = 1024;
    const DataVector linear = generate({SignalKind::linear, big});
    const CompressionResult r = approximate(build_plan(big, 0.0), linear, 10);
    const auto reference = oracle::dft_truncation_errors(linear.values.real(), 10);
    CHECK(std::abs(r.error_norm - reference[9]) <= 1e-9);
  }
}

TEST_CASE("error curve at a = 0 matches the independent DFT pipeline") {
  for (Index n : {8, 64, 256}) {
    const DataVector b = generate({SignalKind::weierstrass, n});
    const ErrorCurve curve = error_curve(n, 0.0, b);
    const auto reference = oracle::dft_truncation_errors(b.values.real());
    REQUIRE(curve.mu_dft.size() == reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
      CHECK(std::abs(curve.mu_dft[i] - reference[i]) <= 1e-9);
      CHECK(curve.mu_dwft[i] == curve.mu_dft[i]);
      if (i > 0) CHECK(curve.mu_dft[i] <= curve.mu_dft[i - 1] + 1e-12);
    }
    CHECK(curve.crossover == 0);
  }
}

TEST_CASE("error curve domain and endpoint") {
  for (Index n : {15, 16}) {
    const DataVector b = generate({SignalKind::step, n});
    const ErrorCurve curve = error_curve(n, 0.4, b);
    CHECK(curve.mu_dwft.size() == static_cast<std::size_t>(max_kept_terms(n)));
    CHECK(curve.dwft_at(max_kept_terms(n)) <= 1e-9 * b.values.norm());
    CHECK(curve.dft_at(max_kept_terms(n)) <= 1e-9 * b.values.norm());
    CHECK(curve.dwft_at(1) == doctest::Approx(approximate(build_plan(n, 0.4), b, 1).error_norm));
  }
}

TEST_CASE("fast and dense sweeps agree") {
  const Index n = 256;
  const DataVector b = generate({SignalKind::low_high_sine, n});
  const auto dense = error_norms(build_plan(n, 0.5), b);
  const auto fast = error_norms(SparseFactor(n, 0.5), b);
  REQUIRE(dense.size() == fast.size());
  for (std::size_t i = 0; i < dense.size(); ++i) CHECK(std::abs(dense[i] - fast[i]) <= 1e-10);
}

TEST_CASE("crossover_index") {
  CHECK(crossover_index({1, 1, 1, 1, 0}, {1, 2, 2, 2, 0}) == 4);
  CHECK(crossover_index({2, 1, 3, 1, 0}, {1, 2, 2, 2, 0}) == 2);
  CHECK(crossover_index({2, 1, 1, 1, 1e-14}, {1, 2, 2, 2, 2e-14}) == 4);
  CHECK(crossover_index({1, 3, 1, 1, 0}, {1, 2, 2, 2, 0}) == 0);
  CHECK(crossover_index({1, 1, 1, 1, 0}, {1, 1, 2, 2, 0}) == 0);
  CHECK(crossover_index({}, {}) == 0);
}
