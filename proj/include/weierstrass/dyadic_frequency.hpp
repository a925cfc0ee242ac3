#pragma once

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace weierstrass {

// Integer frequency stored as odd * 2^shift.
//
// Basis functions carry frequencies k * 2^m with m running into the hundreds
// when a is close to 1, far past any fixed-width integer. Every such frequency
// shares the odd part of k, so the pair (odd, shift) is exact and cheap.
// Zero is represented as (0, 0).
class DyadicFrequency {
 public:
  constexpr DyadicFrequency() = default;

  // Implicit so that integer literals work as map keys: {{1, c}, {2, c}}.
  constexpr DyadicFrequency(std::int64_t value) {  // NOLINT
    if (value == 0) return;
    const auto magnitude = static_cast<std::uint64_t>(value < 0 ? -value : value);
    shift_ = static_cast<unsigned>(std::countr_zero(magnitude));
    odd_ = value >> shift_;
  }

  static constexpr DyadicFrequency from_parts(std::int64_t odd, unsigned shift) {
    DyadicFrequency f(odd);
    if (odd != 0) f.shift_ += shift;
    return f;
  }

  constexpr std::int64_t odd() const { return odd_; }
  constexpr unsigned shift() const { return shift_; }
  constexpr bool is_zero() const { return odd_ == 0; }
  constexpr bool is_even() const { return odd_ == 0 || shift_ > 0; }

  constexpr DyadicFrequency doubled() const {
    return is_zero() ? *this : from_parts(odd_, shift_ + 1);
  }

  constexpr DyadicFrequency halved() const {
    if (!is_even()) throw std::domain_error("halved: odd frequency");
    return is_zero() ? *this : from_parts(odd_, shift_ - 1);
  }

  constexpr DyadicFrequency operator-() const { return from_parts(-odd_, shift_); }

  // The integer value when it fits in 63 bits.
  std::optional<std::int64_t> to_int64() const {
    if (is_zero()) return 0;
    const auto magnitude = static_cast<std::uint64_t>(odd_ < 0 ? -odd_ : odd_);
    if (shift_ >= 63 || std::bit_width(magnitude) + shift_ > 63) return std::nullopt;
    return odd_ * (std::int64_t{1} << shift_);
  }

  // Residue in [0, n).
  std::int64_t mod(std::int64_t n) const {
    std::int64_t r = ((odd_ % n) + n) % n;
    for (unsigned s = 0; s < shift_ && r != 0; ++s) r = (2 * r) % n;
    return r;
  }

  // Fractional part of (frequency * x), i.e. the number of turns of
  // e^{2 pi i q x} reduced to [0, 1). ldexp and the floor subtraction are exact
  // for binary floating point, so huge shifts lose nothing.
  template <typename Scalar>
  Scalar turns(const Scalar& x) const {
    using std::floor;
    using std::ldexp;
    Scalar t = ldexp(x, static_cast<int>(shift_));
    t -= floor(t);
    t *= Scalar(odd_);
    t -= floor(t);
    return t;
  }

  friend constexpr auto operator<=>(const DyadicFrequency&, const DyadicFrequency&) = default;

  friend std::ostream& operator<<(std::ostream& os, const DyadicFrequency& f) {
    if (auto v = f.to_int64()) return os << *v;
    return os << f.odd_ << "*2^" << f.shift_;
  }

 private:
  std::int64_t odd_ = 0;
  unsigned shift_ = 0;
};

}  // namespace weierstrass
