#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/LU>
#include <Eigen/SparseCore>

#include "weierstrass/grid.hpp"

namespace weierstrass {

/// Raised when a transform matrix (or its sparse factor) cannot be inverted
/// in double precision.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample vector b = (b_0, ..., b_{n-1}). real_tagged records that the source
/// data were real, which makes reconstructions drop their imaginary part.
struct DataVector {
  Eigen::VectorXcd values;
  bool real_tagged = false;

  static DataVector real(const Eigen::VectorXd& v) { return {v.cast<std::complex<double>>(), true}; }
  static DataVector complex(Eigen::VectorXcd v) { return {std::move(v), false}; }

  Index size() const { return values.size(); }
};

using SparseMatrixXcd = Eigen::SparseMatrix<std::complex<double>>;

/// Sparse S with A = F S, where F_{iq} = e^{2 pi i i q / n} and A is the
/// transform matrix. Column j of S is grid_spectrum of the column's basis
/// index, so it holds at most log2(n) + 1 nonzeros. Power-of-two n only.
/// Immutable once built; solve() and apply() may be called concurrently.
class SparseFactor {
 public:
  SparseFactor(Index n, double a, IndexConvention convention = IndexConvention::literal);

  Index n() const { return matrix_.rows(); }
  double a() const { return a_; }
  const SparseMatrixXcd& matrix() const { return matrix_; }

  /// S c
  Eigen::VectorXcd apply(const Eigen::Ref<const Eigen::VectorXcd>& c) const;

  /// S^{-1} y; throws SingularMatrix if the sparse LU failed.
  Eigen::VectorXcd solve(const Eigen::Ref<const Eigen::VectorXcd>& y) const;

  bool factorized() const;

 private:
  struct Solver;

  double a_;
  SparseMatrixXcd matrix_;
  std::shared_ptr<const Solver> solver_;
};

/// Reciprocal condition estimates below this flag a plan as ill-conditioned.
inline constexpr double condition_warning_threshold = 1e12;

struct PlanOptions {
  bool want_fast = false;
  IndexConvention convention = IndexConvention::literal;
};

/// Everything precomputed for a fixed (n, a): the dense matrix
/// A_ij = basis_tilde(column_frequency(j))(i / n), its partial-pivot LU, a
/// condition estimate and, for power-of-two n on request, the sparse factor.
/// Immutable after construction and safe to share between threads.
class TransformPlan {
 public:
  TransformPlan(Index n, double a, const PlanOptions& options = {});

  Index n() const { return matrix_.rows(); }
  double a() const { return a_; }
  IndexConvention convention() const { return convention_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  /// Estimated 1-norm condition number of A.
  double condition_estimate() const { return condition_; }
  bool ill_conditioned() const { return condition_ > condition_warning_threshold; }

  const SparseFactor* sparse_factor() const { return sparse_ ? &*sparse_ : nullptr; }

  /// A^{-1} b via the cached factorization.
  Eigen::VectorXcd solve(const Eigen::Ref<const Eigen::VectorXcd>& b) const;

  /// A c
  Eigen::VectorXcd apply(const Eigen::Ref<const Eigen::VectorXcd>& c) const;

 private:
  double a_;
  IndexConvention convention_;
  Eigen::MatrixXcd matrix_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  double condition_ = 1.0;
  std::optional<SparseFactor> sparse_;
};

/// Dense n x n transform matrix, assembled column by column.
Eigen::MatrixXcd transform_matrix(Index n, double a, IndexConvention convention = IndexConvention::literal);

TransformPlan build_plan(Index n, double a, bool want_fast = false,
                         IndexConvention convention = IndexConvention::literal);

/// c = A^{-1} b
DataVector dwft(const TransformPlan& plan, const DataVector& b);

/// b = A c
DataVector idwft(const TransformPlan& plan, const DataVector& c);

/// A c computed as F (S c) with an FFT for F.
DataVector fast_idwft(const SparseFactor& factor, const DataVector& c);

/// A^{-1} b computed as S^{-1} (F^{-1} b), F^{-1} b = fft(b) / n.
DataVector fast_dwft(const SparseFactor& factor, const DataVector& b);

}  // namespace weierstrass
