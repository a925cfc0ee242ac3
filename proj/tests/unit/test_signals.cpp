#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weierstrass/signals.hpp"

using namespace weierstrass;

TEST_CASE("generated signals") {
  const DataVector linear = generate({SignalKind::linear, 4});
  CHECK(linear.real_tagged);
  CHECK(linear.values.real() == Eigen::Vector4d(-0.5, -0.25, 0.0, 0.25));
  CHECK(linear.values.imag().isZero(0.0));

  const DataVector step = generate({SignalKind::step, 4});
  CHECK(step.values.real() == Eigen::Vector4d(0.0, 0.0, 0.0, 1.0));

  const DataVector w = generate({SignalKind::weierstrass, 8, 0.42});
  CHECK(w.values[0].real() == doctest::Approx(1.0 / (1.0 - 0.42)).epsilon(1e-14));

  const DataVector s = generate({SignalKind::low_high_sine, 1024});
  CHECK(s.values.cwiseAbs().maxCoeff() <= 1.02);
  CHECK(s.values[1].real() == doctest::Approx(std::sin(1.0 / 1024) + 0.01 * std::sin(105.0 / 1024)));
}

TEST_CASE("weierstrass signal truncation") {
  // dropped tail is below r^K / (1 - r) with r^K < 1e-15
  const double r = 0.42;
  for (double x : {0.0, 0.125, 0.3, 0.77}) {
    double reference = 0.0;
    for (int k = 0; k < 200; ++k) reference += std::pow(r, k) * std::cos(M_PI * std::fmod(std::ldexp(x, k), 2.0));
    CHECK(std::abs(weierstrass_function(x, r) - reference) <= 1e-15 / (1 - r) + 1e-15);
  }
}

TEST_CASE("signals are deterministic") {
  for (auto kind : {SignalKind::linear, SignalKind::low_high_sine, SignalKind::step, SignalKind::weierstrass}) {
    const DataVector first = generate({kind, 300});
    const DataVector second = generate({kind, 300});
    CHECK(first.values == second.values);
  }
}

TEST_CASE("signal spec validation") {
  CHECK_THROWS_AS(generate({SignalKind::linear, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({SignalKind::weierstrass, 8, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({SignalKind::weierstrass, 8, 0.0}), std::invalid_argument);
  CHECK(parse_signal_kind("low-high-sine") == SignalKind::low_high_sine);
  CHECK_THROWS_AS(parse_signal_kind("square"), std::invalid_argument);
}

TEST_CASE("csv parsing") {
  SUBCASE("plain values") {
    std::istringstream in("1.0\n2.0\n3.0");
    const DataVector b = parse_csv(in);
    CHECK(b.real_tagged);
    CHECK(b.values.real() == Eigen::Vector3d(1, 2, 3));
  }
  SUBCASE("header line") {
    std::istringstream in("price\n1.5\n2.5\n");
    CHECK(parse_csv(in).values.real() == Eigen::Vector2d(1.5, 2.5));
  }
  SUBCASE("bad record") {
    std::istringstream in("1.0\nabc");
    try {
      parse_csv(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("date,value records with blank lines") {
    std::istringstream in("date,open\r\n2010-09-30,45.1\r\n\r\n2010-10-01, 46\r\n");
    CHECK(parse_csv(in).values.real() == Eigen::Vector2d(45.1, 46.0));
  }
  SUBCASE("empty input") {
    std::istringstream header_only("value\n");
    CHECK_THROWS_AS(parse_csv(header_only), EmptyInput);
    std::istringstream nothing("");
    CHECK_THROWS_AS(parse_csv(nothing), EmptyInput);
  }
  SUBCASE("non-finite values are rejected") {
    std::istringstream in("1\ninf\n");
    CHECK_THROWS_AS(parse_csv(in), ParseError);
  }
}

TEST_CASE("csv files") {
  const auto path = std::filesystem::temp_directory_path() / "weierstrass_signals_test.csv";
  {
    std::ofstream out(path);
    out.precision(17);
    const DataVector b = generate({SignalKind::weierstrass, 64});
    out << "level\n";
    for (Index i = 0; i < b.size(); ++i) out << b.values[i].real() << '\n';
  }
  const DataVector loaded = generate({SignalKind::csv, 1, 0.42, 1e-15, path});
  CHECK(loaded.size() == 64);
  CHECK(loaded.values == generate({SignalKind::weierstrass, 64}).values);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_csv(path), std::runtime_error);
}
