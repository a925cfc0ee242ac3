#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

#include "weierstrass/dyadic_frequency.hpp"

namespace weierstrass {

/// A finite trigonometric series x -> sum_q c_q e^{2 pi i q x} on [0, 1),
/// stored as a sparse map from frequency to coefficient.
///
/// No stored coefficient is exactly zero: add() merges colliding frequencies
/// and erases the entry when the sum cancels.
template <typename Scalar = double>
class SpectralFunction {
 public:
  using Complex = std::complex<Scalar>;
  using Terms = std::map<DyadicFrequency, Complex>;

  SpectralFunction() = default;

  SpectralFunction(std::initializer_list<std::pair<DyadicFrequency, Complex>> terms) {
    for (const auto& [q, c] : terms) add(q, c);
  }

  void add(const DyadicFrequency& q, const Complex& c) {
    if (c == Complex(0)) return;
    auto [it, inserted] = terms_.try_emplace(q, c);
    if (inserted) return;
    it->second += c;
    if (it->second == Complex(0)) terms_.erase(it);
  }

  Complex coefficient(const DyadicFrequency& q) const {
    auto it = terms_.find(q);
    return it == terms_.end() ? Complex(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  SpectralFunction& operator+=(const SpectralFunction& other) {
    for (const auto& [q, c] : other.terms_) add(q, c);
    return *this;
  }

  SpectralFunction& operator*=(const Complex& s) {
    if (s == Complex(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [q, c] : terms_) c *= s;
    return *this;
  }

  friend SpectralFunction operator*(SpectralFunction f, const Complex& s) { return f *= s; }
  friend SpectralFunction operator+(SpectralFunction f, const SpectralFunction& g) { return f += g; }

  friend bool operator==(const SpectralFunction&, const SpectralFunction&) = default;

 private:
  Terms terms_;
};

/// Pointwise value of the series at x.
template <typename Scalar>
std::complex<Scalar> evaluate(const SpectralFunction<Scalar>& f, const Scalar& x) {
  using std::acos;
  using std::cos;
  using std::sin;
  const Scalar two_pi = Scalar(2) * acos(Scalar(-1));
  std::complex<Scalar> sum(0);
  for (const auto& [q, c] : f.terms()) {
    const Scalar angle = two_pi * q.turns(x);
    sum += c * std::complex<Scalar>(cos(angle), sin(angle));
  }
  return sum;
}

/// L2([0,1]) inner product <f, g> = sum over shared frequencies of f_q conj(g_q).
/// Exact for the stored series since {e^{2 pi i q x}} is orthonormal.
template <typename Scalar>
std::complex<Scalar> inner_product(const SpectralFunction<Scalar>& f, const SpectralFunction<Scalar>& g) {
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  std::complex<Scalar> sum(0);
  for (const auto& [q, c] : small.terms()) {
    auto it = large.terms().find(q);
    if (it == large.terms().end()) continue;
    sum += &small == &f ? c * std::conj(it->second) : it->second * std::conj(c);
  }
  return sum;
}

}  // namespace weierstrass
