#include "weierstrass/grid.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace weierstrass {

std::string_view to_string(IndexConvention convention) {
  return convention == IndexConvention::literal ? "literal" : "signed";
}

IndexConvention parse_index_convention(std::string_view name) {
  if (name == "literal") return IndexConvention::literal;
  if (name == "signed") return IndexConvention::signed_frequency;
  throw std::invalid_argument("unknown index convention: " + std::string(name));
}

bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

std::int64_t column_frequency(Index j, Index n, IndexConvention convention) {
  if (j < 0 || j >= n) throw std::out_of_range("column_frequency: column index out of range");
  if (convention == IndexConvention::literal || j <= n / 2) return j;
  return j - n;
}

std::vector<GridTerm> grid_spectrum(std::int64_t k, Index n, double a, double tolerance) {
  if (n < 1) throw std::invalid_argument("grid_spectrum: n must be positive");
  check_parameter(a);

  std::map<Index, std::complex<double>> rows;
  auto add = [&rows](Index row, double value) {
    auto& slot = rows[row];
    slot += value;
    if (slot == 0.0) rows.erase(row);
  };
  auto residue = [n](std::int64_t q) { return static_cast<Index>(((q % n) + n) % n); };

  // scale * sum_{m>=0} a^m e_{k 2^m}, aliased mod n
  auto add_chain = [&](std::int64_t start, double scale) {
    const int cap = is_power_of_two(n) ? std::numeric_limits<int>::max() : depth_for_tolerance(a, tolerance);
    Index q = residue(start);
    double weight = scale;
    for (int m = 0; m < cap; ++m) {
      if (q == 0) {
        add(0, weight / (1.0 - a));
        return;
      }
      add(q, weight);
      if (a == 0.0) return;
      weight *= a;
      q = (2 * q) % n;
    }
  };

  if (k == 0) {
    add(0, 1.0);
  } else if (k % 2 != 0) {
    add_chain(k, std::sqrt(1.0 - a * a));
  } else {
    add_chain(k, 1.0 - a * a);
    add(residue(k / 2), -a);
  }

  std::vector<GridTerm> out;
  out.reserve(rows.size());
  for (const auto& [row, value] : rows) out.push_back({row, value});
  return out;
}

Eigen::VectorXcd roots_of_unity(Index n) {
  Eigen::VectorXcd roots(n);
  for (Index q = 0; q < n; ++q)
    roots[q] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(n));
  return roots;
}

Eigen::VectorXcd synthesize_on_grid(const std::vector<GridTerm>& spectrum, const Eigen::VectorXcd& roots) {
  const Index n = roots.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (const auto& term : spectrum) {
    Index phase = 0;
    for (Index i = 0; i < n; ++i) {
      out[i] += term.value * roots[phase];
      phase += term.row;
      if (phase >= n) phase -= n;
    }
  }
  return out;
}

Eigen::VectorXcd sample_basis_on_grid(std::int64_t k, Index n, double a) {
  return synthesize_on_grid(grid_spectrum(k, n, a), roots_of_unity(n));
}

}  // namespace weierstrass
