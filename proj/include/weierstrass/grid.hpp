#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "weierstrass/basis.hpp"

namespace weierstrass {

using Index = Eigen::Index;

/// How transform column j is assigned a basis index.
///   literal:          column j samples basis_tilde(j), j = 0..n-1
///   signed_frequency: column j samples basis_tilde(j) for j <= n/2 and
///                     basis_tilde(j - n) above, mirroring the DFT
///                     conjugate-pair layout
enum class IndexConvention { literal, signed_frequency };

std::string_view to_string(IndexConvention convention);
IndexConvention parse_index_convention(std::string_view name);

bool is_power_of_two(Index n);

/// Basis index sampled by column j of an n-point transform.
std::int64_t column_frequency(Index j, Index n, IndexConvention convention);

/// One nonzero of a basis function's spectrum after aliasing onto n points.
struct GridTerm {
  Index row;
  std::complex<double> value;
};

/// Spectrum of basis_tilde(k) aliased onto the n-point grid: row q holds the
/// weight of e^{2 pi i q x}, q in [0, n). For power-of-two n the chain
/// k 2^m reaches 0 mod n after at most log2(n) steps, and the remaining
/// geometric tail a^m / (1 - a) is folded into row 0 exactly. Other n truncate
/// the chain at depth_for_tolerance(a, tolerance) unless it happens to hit 0.
/// Rows are sorted ascending and unique; exact zeros are dropped.
std::vector<GridTerm> grid_spectrum(std::int64_t k, Index n, double a, double tolerance = default_tolerance);

/// e^{2 pi i q / n} for q = 0..n-1.
Eigen::VectorXcd roots_of_unity(Index n);

/// (sum_q S_q e^{2 pi i q i / n})_{i=0..n-1}, phases reduced mod n exactly.
Eigen::VectorXcd synthesize_on_grid(const std::vector<GridTerm>& spectrum, const Eigen::VectorXcd& roots);

/// basis_tilde(k) sampled at x_i = i / n.
Eigen::VectorXcd sample_basis_on_grid(std::int64_t k, Index n, double a);

}  // namespace weierstrass
