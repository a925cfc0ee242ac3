#pragma once

#include <vector>

#include <Eigen/Core>

#include "weierstrass/transform.hpp"

namespace weierstrass {

/// Largest admissible kept-term count: n/2 + 1 for even n, (n + 1)/2 for odd n.
Index max_kept_terms(Index n);

/// Zeroes c_k .. c_{n-k}; keeps c_0 .. c_{k-1} and c_{n-k+1} .. c_{n-1}.
/// Throws std::out_of_range unless 1 <= k <= max_kept_terms(n).
Eigen::VectorXcd truncate_coeffs(const Eigen::Ref<const Eigen::VectorXcd>& c, Index k);

struct CompressionResult {
  Index k = 0;
  Eigen::VectorXcd c_trunc;
  /// b''(k): real part of A c'(k) for real-tagged input, A c'(k) otherwise.
  Eigen::VectorXcd reconstruction;
  Eigen::VectorXcd error_vector;
  double error_norm = 0.0;
  /// ||Im(A c'(k))||_2 before the real part is taken. Diagnostic only.
  double discarded_imag_norm = 0.0;
};

/// transform -> truncate to k terms -> inverse transform -> (real part) -> error.
CompressionResult approximate(const TransformPlan& plan, const DataVector& b, Index k);

/// Same, with the coefficients c = dwft(plan, b) already known.
CompressionResult approximate_from_coeffs(const TransformPlan& plan, const DataVector& b,
                                          const Eigen::VectorXcd& coeffs, Index k);

/// mu(k) = ||E_k||_2 for every admissible k, computed for one plan.
/// Only the kept columns of A take part in each reconstruction.
std::vector<double> error_norms(const TransformPlan& plan, const DataVector& b);

/// error_norms through the FFT-factored path: one sparse solve, then one
/// fast synthesis per k.
std::vector<double> error_norms(const SparseFactor& factor, const DataVector& b);

struct ErrorCurve {
  Index n = 0;
  double a = 0.0;
  /// mu_dwft[k - 1] = mu(k) for the given a, k = 1..max_kept_terms(n)
  std::vector<double> mu_dwft;
  /// same for a = 0 (classical DFT)
  std::vector<double> mu_dft;
  /// Largest K such that mu_dwft(k) < mu_dft(k) for every 2 <= k <= K, else 0.
  /// k = 1 is excluded: both pipelines keep only the constant column there and
  /// the DFT constant is the grid mean, the least-squares optimum. The last k
  /// is excluded too: it keeps everything and both errors are rounding noise.
  Index crossover = 0;

  double dwft_at(Index k) const { return mu_dwft.at(static_cast<std::size_t>(k - 1)); }
  double dft_at(Index k) const { return mu_dft.at(static_cast<std::size_t>(k - 1)); }
};

Index crossover_index(const std::vector<double>& mu_dwft, const std::vector<double>& mu_dft);

/// Builds plans for a and for a = 0 and sweeps all admissible k.
ErrorCurve error_curve(Index n, double a, const DataVector& b,
                       IndexConvention convention = IndexConvention::literal);

/// As above with prebuilt plans (same n).
ErrorCurve error_curve(const TransformPlan& weierstrass_plan, const TransformPlan& fourier_plan, const DataVector& b);

}  // namespace weierstrass
