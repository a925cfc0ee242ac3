#include "weierstrass/transform.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/FFT>

namespace weierstrass {

namespace {

void check_length(Index expected, Index actual, const char* what) {
  if (expected != actual)
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(actual) + " does not match n = " +
                                std::to_string(expected));
}

}  // namespace

Eigen::MatrixXcd transform_matrix(Index n, double a, IndexConvention convention) {
  if (n < 1) throw std::invalid_argument("transform_matrix: n must be positive");
  check_parameter(a);
  const Eigen::VectorXcd roots = roots_of_unity(n);
  Eigen::MatrixXcd matrix(n, n);
  for (Index j = 0; j < n; ++j)
    matrix.col(j) = synthesize_on_grid(grid_spectrum(column_frequency(j, n, convention), n, a), roots);
  return matrix;
}

TransformPlan::TransformPlan(Index n, double a, const PlanOptions& options)
    : a_(a), convention_(options.convention), matrix_(transform_matrix(n, a, options.convention)) {
  lu_.compute(matrix_);

  const Eigen::VectorXd pivots = lu_.matrixLU().diagonal().cwiseAbs();
  const double largest = pivots.maxCoeff();
  if (!(pivots.minCoeff() > static_cast<double>(n) * std::numeric_limits<double>::epsilon() * largest))
    throw SingularMatrix("transform matrix is numerically singular for n = " + std::to_string(n) +
                         ", a = " + std::to_string(a));

  const double rcond = lu_.rcond();
  condition_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();

  if (options.want_fast && is_power_of_two(n)) sparse_.emplace(n, a, options.convention);
}

Eigen::VectorXcd TransformPlan::solve(const Eigen::Ref<const Eigen::VectorXcd>& b) const {
  check_length(n(), b.size(), "dwft");
  return lu_.solve(b);
}

Eigen::VectorXcd TransformPlan::apply(const Eigen::Ref<const Eigen::VectorXcd>& c) const {
  check_length(n(), c.size(), "idwft");
  return matrix_ * c;
}

TransformPlan build_plan(Index n, double a, bool want_fast, IndexConvention convention) {
  return TransformPlan(n, a, PlanOptions{want_fast, convention});
}

DataVector dwft(const TransformPlan& plan, const DataVector& b) {
  return {plan.solve(b.values), b.real_tagged};
}

DataVector idwft(const TransformPlan& plan, const DataVector& c) {
  return {plan.apply(c.values), c.real_tagged};
}

DataVector fast_idwft(const SparseFactor& factor, const DataVector& c) {
  const Eigen::VectorXcd spectrum = factor.apply(c.values);
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  Eigen::VectorXcd out(spectrum.size());
  fft.inv(out, spectrum);
  return {std::move(out), c.real_tagged};
}

DataVector fast_dwft(const SparseFactor& factor, const DataVector& b) {
  check_length(factor.n(), b.size(), "fast_dwft");
  Eigen::FFT<double> fft;
  Eigen::VectorXcd spectrum(b.size());
  fft.fwd(spectrum, b.values);
  spectrum /= static_cast<double>(b.size());
  return {factor.solve(spectrum), b.real_tagged};
}

}  // namespace weierstrass
