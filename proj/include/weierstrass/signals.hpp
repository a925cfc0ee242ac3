#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "weierstrass/transform.hpp"

namespace weierstrass {

enum class SignalKind {
  linear,         // x - 0.5
  low_high_sine,  // sin x + 0.01 sin 105x, x in radians on [0, 1)
  step,           // 0 on [0, 1/2], 1 on (1/2, 1]
  weierstrass,    // sum_{k>=0} r^k cos(pi 2^k x)
  csv,            // external series, see load_csv
};

std::string_view to_string(SignalKind kind);
SignalKind parse_signal_kind(std::string_view name);

struct SignalSpec {
  SignalKind kind = SignalKind::linear;
  Index n = 1024;
  /// Amplitude ratio of the weierstrass signal, in (0, 1).
  double ratio = 0.42;
  /// weierstrass terms stop at the first K with ratio^K < tail_tolerance.
  double tail_tolerance = 1e-15;
  std::filesystem::path csv_path;
};

/// Samples f(i / n), i = 0..n-1, as real-tagged data. csv specs load the file.
DataVector generate(const SignalSpec& spec);

/// sum_{k<K} r^k cos(pi 2^k x), K the first index with r^K < tail_tolerance.
double weierstrass_function(double x, double ratio, double tail_tolerance = 1e-15);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One real value per record. A record with several comma-separated fields
/// contributes its last field. Blank lines are skipped. The first non-blank
/// line is treated as a header if its value field is not numeric.
DataVector parse_csv(std::istream& in);
DataVector load_csv(const std::filesystem::path& path);

}  // namespace weierstrass
