#include <doctest.h>

#include "weierstrass/dyadic_frequency.hpp"

using weierstrass::DyadicFrequency;

TEST_CASE("dyadic frequency normalizes to odd * 2^shift") {
  const DyadicFrequency twelve(12);
  CHECK(twelve.odd() == 3);
  CHECK(twelve.shift() == 2);
  CHECK(DyadicFrequency(-12).odd() == -3);
  CHECK(DyadicFrequency(0).is_zero());
  CHECK(DyadicFrequency(6) == DyadicFrequency::from_parts(3, 1));
  CHECK(DyadicFrequency(7).is_even() == false);
  CHECK(DyadicFrequency(0).is_even());
}

TEST_CASE("doubling and halving") {
  CHECK(DyadicFrequency(5).doubled() == DyadicFrequency(10));
  CHECK(DyadicFrequency(-8).halved() == DyadicFrequency(-4));
  CHECK(DyadicFrequency(0).doubled().is_zero());
  CHECK_THROWS_AS(DyadicFrequency(3).halved(), std::domain_error);
  CHECK(-DyadicFrequency(6) == DyadicFrequency(-6));
}

TEST_CASE("to_int64 reports overflow") {
  CHECK(*DyadicFrequency(-40).to_int64() == -40);
  CHECK(*DyadicFrequency::from_parts(1, 62).to_int64() == (std::int64_t{1} << 62));
  CHECK_FALSE(DyadicFrequency::from_parts(1, 63).to_int64().has_value());
  CHECK_FALSE(DyadicFrequency::from_parts(3, 62).to_int64().has_value());
}

TEST_CASE("residues modulo n") {
  CHECK(DyadicFrequency(-1).mod(8) == 7);
  CHECK(DyadicFrequency(12).mod(8) == 4);
  CHECK(DyadicFrequency::from_parts(3, 300).mod(1024) == 0);
  CHECK(DyadicFrequency::from_parts(3, 200).mod(12) == 0);
  // 2^m mod 12 cycles 4, 8, 4, 8 for m >= 2
  CHECK(DyadicFrequency::from_parts(1, 3).mod(12) == 8);
  CHECK(DyadicFrequency::from_parts(1, 4).mod(12) == 4);
}

TEST_CASE("turns reduce huge frequencies exactly") {
  CHECK(DyadicFrequency(1).turns(0.25) == doctest::Approx(0.25));
  CHECK(DyadicFrequency(-1).turns(0.25) == doctest::Approx(0.75));
  CHECK(DyadicFrequency(3).turns(0.5) == doctest::Approx(0.5));
  // 2^200 * (1/8) is an integer
  CHECK(DyadicFrequency::from_parts(1, 200).turns(0.125) == 0.0);
}
