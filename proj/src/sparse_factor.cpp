#include <string>
#include <vector>

#include <Eigen/SparseLU>

#include "weierstrass/transform.hpp"

namespace weierstrass {

struct SparseFactor::Solver {
  Eigen::SparseLU<SparseMatrixXcd, Eigen::COLAMDOrdering<int>> lu;
  bool ok = false;
};

SparseFactor::SparseFactor(Index n, double a, IndexConvention convention) : a_(a), matrix_(n, n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("SparseFactor: n must be a power of two");
  check_parameter(a);

  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  for (Index j = 0; j < n; ++j)
    for (const auto& term : grid_spectrum(column_frequency(j, n, convention), n, a))
      triplets.emplace_back(static_cast<int>(term.row), static_cast<int>(j), term.value);
  matrix_.setFromTriplets(triplets.begin(), triplets.end());
  matrix_.makeCompressed();

  auto solver = std::make_shared<Solver>();
  solver->lu.compute(matrix_);
  solver->ok = solver->lu.info() == Eigen::Success;
  solver_ = std::move(solver);
}

Eigen::VectorXcd SparseFactor::apply(const Eigen::Ref<const Eigen::VectorXcd>& c) const {
  if (c.size() != n()) throw std::invalid_argument("fast_idwft: length " + std::to_string(c.size()) + " != n");
  return matrix_ * c;
}

Eigen::VectorXcd SparseFactor::solve(const Eigen::Ref<const Eigen::VectorXcd>& y) const {
  if (!solver_->ok) throw SingularMatrix("sparse factor could not be factorized: " + solver_->lu.lastErrorMessage());
  Eigen::VectorXcd out = solver_->lu.solve(y);
  if (solver_->lu.info() != Eigen::Success) throw SingularMatrix("sparse solve failed");
  return out;
}

bool SparseFactor::factorized() const { return solver_->ok; }

}  // namespace weierstrass
