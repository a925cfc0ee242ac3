#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weierstrass/signals.hpp"

namespace weierstrass::cli {

enum class Command { gen, transform, compress, error_curve, bench };
enum class Format { csv, json };

inline constexpr int schema_version = 1;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int data = 2;
inline constexpr int numerical = 3;
}  // namespace exit_code

struct BenchConfig {
  int min_log2 = 10;
  int max_log2 = 14;
  /// Dense timings need the n x n matrix; skipped above this size.
  int dense_max_log2 = 12;
  int repeats = 5;
};

struct RunConfig {
  Command command = Command::gen;
  double a = 0.5;
  Index n = 1024;
  Index k = 10;
  SignalSpec signal;
  /// Unset: on for power-of-two n.
  std::optional<bool> fast;
  bool inverse = false;
  IndexConvention convention = IndexConvention::literal;
  std::string output;  // empty: standard output
  Format format = Format::csv;
  BenchConfig bench;
};

/// Parses argv-style arguments (without the program name) and runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already validated configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace weierstrass::cli
