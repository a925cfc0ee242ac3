#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "weierstrass/spectral_function.hpp"

namespace weierstrass {

inline constexpr double default_tolerance = 1e-12;

/// Smallest depth M with a^M / (1 - a) <= tolerance; 1 when a == 0.
int depth_for_tolerance(double a, double tolerance = default_tolerance);

/// Throws std::invalid_argument unless 0 <= a < 1.
void check_parameter(double a);

/// Self-similarity parameter a in [0, 1) and the number of retained terms M of
/// the series sum_m a^m e_{k 2^m}. The dilation factor is fixed at 2.
template <typename Scalar = double>
struct BasisParams {
  Scalar a{0};
  int depth = 1;

  static BasisParams with_depth(const Scalar& a, int depth) {
    check_parameter(static_cast<double>(a));
    if (depth < 0) throw std::invalid_argument("BasisParams: negative depth");
    return {a, depth};
  }

  static BasisParams with_tolerance(const Scalar& a, double tolerance = default_tolerance) {
    if (!(tolerance > 0)) throw std::invalid_argument("BasisParams: tolerance must be positive");
    check_parameter(static_cast<double>(a));
    return {a, depth_for_tolerance(static_cast<double>(a), tolerance)};
  }
};

namespace detail {

// scale * sum_{m < depth} a^m e_{k 2^m}
template <typename Scalar>
void add_dyadic_chain(SpectralFunction<Scalar>& f, const DyadicFrequency& k, const Scalar& a, int depth,
                      const Scalar& scale) {
  Scalar weight = scale;
  DyadicFrequency q = k;
  for (int m = 0; m < depth; ++m) {
    f.add(q, weight);
    weight *= a;
    q = q.doubled();
  }
}

}  // namespace detail

/// Normalized image of e_k under g -> sum_m a^m g(2^m x):
/// 1 for k = 0, otherwise sqrt(1 - a^2) sum_{m<M} a^m e_{k 2^m}.
template <typename Scalar>
SpectralFunction<Scalar> basis_hat(const DyadicFrequency& k, const BasisParams<Scalar>& params) {
  using std::sqrt;
  SpectralFunction<Scalar> f;
  if (k.is_zero()) {
    f.add(k, Scalar(1));
    return f;
  }
  const Scalar& a = params.a;
  detail::add_dyadic_chain(f, k, a, params.depth, Scalar(sqrt(Scalar(1) - a * a)));
  return f;
}

/// Orthonormalized basis function.
///   k = 0:          1
///   k odd:          basis_hat(k)
///   k even, k != 0: (1 - a^2) sum_{m<M} a^m e_{k 2^m} - a e_{k/2}
template <typename Scalar>
SpectralFunction<Scalar> basis_tilde(const DyadicFrequency& k, const BasisParams<Scalar>& params) {
  if (k.is_zero() || !k.is_even()) return basis_hat(k, params);
  const Scalar& a = params.a;
  SpectralFunction<Scalar> f;
  detail::add_dyadic_chain(f, k, a, params.depth, Scalar(Scalar(1) - a * a));
  f.add(k.halved(), Scalar(-a));
  return f;
}

/// Maps Fourier coefficients alpha_q (|q| <= range, zero outside) to the
/// coefficients of the same function in the orthonormal basis:
///   k = 0:    alpha_0
///   k odd:    sqrt(1 - a^2) sum_m a^m alpha_{k 2^m}
///   k even:   (1 - a^2) sum_m a^m alpha_{k 2^m} - a alpha_{k/2}
/// The m-sums stop once |k 2^m| leaves the range, which is exact.
template <typename Scalar>
SpectralFunction<Scalar> alpha_to_walpha(const SpectralFunction<Scalar>& alpha, std::int64_t range,
                                         const BasisParams<Scalar>& params) {
  using std::sqrt;
  const Scalar& a = params.a;
  const Scalar one_minus_a2 = Scalar(1) - a * a;
  const Scalar root = sqrt(one_minus_a2);

  auto chain_sum = [&](std::int64_t k) {
    std::complex<Scalar> sum(0);
    Scalar weight(1);
    for (std::int64_t q = k; q >= -range && q <= range; q *= 2) {
      sum += weight * alpha.coefficient(q);
      weight *= a;
    }
    return sum;
  };

  SpectralFunction<Scalar> walpha;
  for (std::int64_t k = -range; k <= range; ++k) {
    if (k == 0) {
      walpha.add(0, alpha.coefficient(0));
    } else if (k % 2 != 0) {
      walpha.add(k, root * chain_sum(k));
    } else {
      walpha.add(k, one_minus_a2 * chain_sum(k) - a * alpha.coefficient(k / 2));
    }
  }
  return walpha;
}

/// sum_k walpha_k * basis_tilde(k)(x) over the stored coefficients.
template <typename Scalar>
std::complex<Scalar> partial_sum(const SpectralFunction<Scalar>& walpha, const BasisParams<Scalar>& params,
                                 const Scalar& x) {
  std::complex<Scalar> sum(0);
  for (const auto& [k, c] : walpha.terms()) sum += c * evaluate(basis_tilde(k, params), x);
  return sum;
}

}  // namespace weierstrass
