#include "weierstrass/compress.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace weierstrass {

Index max_kept_terms(Index n) { return n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2; }

Eigen::VectorXcd truncate_coeffs(const Eigen::Ref<const Eigen::VectorXcd>& c, Index k) {
  const Index n = c.size();
  if (k < 1 || k > max_kept_terms(n))
    throw std::out_of_range("kept terms k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(max_kept_terms(n)) + "] for n = " + std::to_string(n));
  Eigen::VectorXcd out = c;
  if (n - k >= k) out.segment(k, n - 2 * k + 1).setZero();
  return out;
}

namespace {

// A c'(k) using only the kept columns.
Eigen::VectorXcd reconstruct(const Eigen::MatrixXcd& matrix, const Eigen::VectorXcd& coeffs, Index k) {
  const Index n = coeffs.size();
  const Index tail = std::min(k - 1, n - k);
  Eigen::VectorXcd out = matrix.leftCols(k) * coeffs.head(k);
  if (tail > 0) out.noalias() += matrix.rightCols(tail) * coeffs.tail(tail);
  return out;
}

}  // namespace

CompressionResult approximate_from_coeffs(const TransformPlan& plan, const DataVector& b,
                                          const Eigen::VectorXcd& coeffs, Index k) {
  CompressionResult result;
  result.k = k;
  result.c_trunc = truncate_coeffs(coeffs, k);
  result.reconstruction = plan.apply(result.c_trunc);
  if (b.real_tagged) {
    result.discarded_imag_norm = result.reconstruction.imag().norm();
    result.reconstruction = result.reconstruction.real().cast<std::complex<double>>();
  }
  result.error_vector = result.reconstruction - b.values;
  result.error_norm = result.error_vector.norm();
  return result;
}

CompressionResult approximate(const TransformPlan& plan, const DataVector& b, Index k) {
  return approximate_from_coeffs(plan, b, plan.solve(b.values), k);
}

std::vector<double> error_norms(const TransformPlan& plan, const DataVector& b) {
  const Eigen::VectorXcd coeffs = plan.solve(b.values);
  const Index k_max = max_kept_terms(plan.n());
  std::vector<double> mu(static_cast<std::size_t>(k_max));
  for (Index k = 1; k <= k_max; ++k) {
    Eigen::VectorXcd approx = reconstruct(plan.matrix(), coeffs, k);
    if (b.real_tagged) approx.imag().setZero();
    mu[static_cast<std::size_t>(k - 1)] = (approx - b.values).norm();
  }
  return mu;
}

std::vector<double> error_norms(const SparseFactor& factor, const DataVector& b) {
  const DataVector coeffs = fast_dwft(factor, b);
  const Index k_max = max_kept_terms(factor.n());
  std::vector<double> mu(static_cast<std::size_t>(k_max));
  for (Index k = 1; k <= k_max; ++k) {
    Eigen::VectorXcd approx = fast_idwft(factor, {truncate_coeffs(coeffs.values, k), false}).values;
    if (b.real_tagged) approx.imag().setZero();
    mu[static_cast<std::size_t>(k - 1)] = (approx - b.values).norm();
  }
  return mu;
}

Index crossover_index(const std::vector<double>& mu_dwft, const std::vector<double>& mu_dft) {
  // The last k keeps every coefficient; both errors vanish there up to rounding.
  const std::size_t count = std::min(mu_dwft.size(), mu_dft.size());
  Index crossover = 0;
  for (std::size_t i = 1; i + 1 < count && mu_dwft[i] < mu_dft[i]; ++i) crossover = static_cast<Index>(i + 1);
  return crossover;
}

ErrorCurve error_curve(const TransformPlan& weierstrass_plan, const TransformPlan& fourier_plan, const DataVector& b) {
  if (weierstrass_plan.n() != fourier_plan.n()) throw std::invalid_argument("error_curve: plans differ in n");
  ErrorCurve curve;
  curve.n = weierstrass_plan.n();
  curve.a = weierstrass_plan.a();
  curve.mu_dwft = error_norms(weierstrass_plan, b);
  curve.mu_dft = error_norms(fourier_plan, b);
  curve.crossover = crossover_index(curve.mu_dwft, curve.mu_dft);
  return curve;
}

ErrorCurve error_curve(Index n, double a, const DataVector& b, IndexConvention convention) {
  const TransformPlan weierstrass_plan = build_plan(n, a, false, convention);
  const TransformPlan fourier_plan = build_plan(n, 0.0, false, convention);
  return error_curve(weierstrass_plan, fourier_plan, b);
}

}  // namespace weierstrass
