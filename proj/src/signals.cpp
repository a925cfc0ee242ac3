#include "weierstrass/signals.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <vector>

namespace weierstrass {

std::string_view to_string(SignalKind kind) {
  switch (kind) {
    case SignalKind::linear: return "linear";
    case SignalKind::low_high_sine: return "low-high-sine";
    case SignalKind::step: return "step";
    case SignalKind::weierstrass: return "weierstrass";
    case SignalKind::csv: return "csv";
  }
  return "unknown";
}

SignalKind parse_signal_kind(std::string_view name) {
  for (auto kind : {SignalKind::linear, SignalKind::low_high_sine, SignalKind::step, SignalKind::weierstrass,
                    SignalKind::csv})
    if (name == to_string(kind)) return kind;
  throw std::invalid_argument("unknown signal kind: " + std::string(name));
}

double weierstrass_function(double x, double ratio, double tail_tolerance) {
  double sum = 0.0;
  double weight = 1.0;
  for (int k = 0; weight >= tail_tolerance; ++k) {
    // cos(pi t) has period 2 in t; reduce 2^k x exactly before the cosine.
    const double t = std::fmod(std::ldexp(x, k), 2.0);
    sum += weight * std::cos(std::numbers::pi * t);
    weight *= ratio;
  }
  return sum;
}

DataVector generate(const SignalSpec& spec) {
  if (spec.kind == SignalKind::csv) return load_csv(spec.csv_path);
  if (spec.n < 1) throw std::invalid_argument("signal length must be positive");
  if (spec.kind == SignalKind::weierstrass && !(spec.ratio > 0.0 && spec.ratio < 1.0))
    throw std::invalid_argument("weierstrass ratio must lie in (0, 1)");

  Eigen::VectorXd values(spec.n);
  for (Index i = 0; i < spec.n; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(spec.n);
    switch (spec.kind) {
      case SignalKind::linear: values[i] = x - 0.5; break;
      case SignalKind::low_high_sine: values[i] = std::sin(x) + 0.01 * std::sin(105.0 * x); break;
      case SignalKind::step: values[i] = x <= 0.5 ? 0.0 : 1.0; break;
      case SignalKind::weierstrass: values[i] = weierstrass_function(x, spec.ratio, spec.tail_tolerance); break;
      case SignalKind::csv: break;
    }
  }
  return DataVector::real(values);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

DataVector parse_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_number = 0;
  bool seen_record = false;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view record = trim(line);
    if (record.empty()) continue;

    const auto comma = record.rfind(',');
    const std::string_view field = comma == std::string_view::npos ? record : record.substr(comma + 1);
    const auto value = parse_number(field);

    const bool first = !seen_record;
    seen_record = true;
    if (first && !value) continue;  // header
    if (!value) throw ParseError(line_number, "not a number: '" + std::string(trim(field)) + "'");
    values.push_back(*value);
  }
  if (values.empty()) throw EmptyInput("no data records");
  return DataVector::real(Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Index>(values.size())));
}

DataVector load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_csv(in);
}

}  // namespace weierstrass
