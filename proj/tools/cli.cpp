#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "weierstrass/compress.hpp"
#include "weierstrass/transform.hpp"

namespace weierstrass::cli {

namespace {

using Cell = std::variant<std::int64_t, double, std::string>;

// Column-oriented result plus a few summary fields; rendered as CSV or JSON.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  return std::get<std::string>(cell);
}

nlohmann::json to_json(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, cell);
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_cell(row[c]);
    out << '\n';
  }
  for (const auto& [key, value] : table.summary) out << "# " << key << ',' << format_cell(value) << '\n';
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = table.command;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record;
    for (std::size_t c = 0; c < row.size(); ++c) record[table.columns[c]] = to_json(row[c]);
    rows.push_back(std::move(record));
  }
  doc["rows"] = std::move(rows);
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.summary) summary[key] = to_json(value);
  doc["summary"] = std::move(summary);
  out << doc.dump(2) << '\n';
}

bool use_fast(const RunConfig& config, Index n) {
  return config.fast.value_or(true) && is_power_of_two(n);
}

// Forward and inverse transform for one (n, a), fast when allowed, dense
// otherwise or when the sparse factor cannot be used.
class Transformer {
 public:
  Transformer(Index n, double a, const RunConfig& config, std::ostream& err) {
    if (use_fast(config, n)) {
      try {
        factor_.emplace(n, a, config.convention);
        if (factor_->factorized()) return;
        err << "warning: sparse factor unusable, falling back to dense path\n";
      } catch (const std::exception& e) {
        err << "warning: fast path failed (" << e.what() << "), falling back to dense path\n";
      }
      factor_.reset();
    }
    plan_.emplace(n, a, PlanOptions{false, config.convention});
    if (plan_->ill_conditioned())
      err << "warning: transform matrix condition estimate " << format_double(plan_->condition_estimate())
          << " exceeds " << format_double(condition_warning_threshold) << '\n';
  }

  bool fast() const { return factor_.has_value(); }
  std::string path() const { return fast() ? "fast" : "dense"; }

  DataVector forward(const DataVector& b) const { return fast() ? fast_dwft(*factor_, b) : dwft(*plan_, b); }
  DataVector inverse(const DataVector& c) const { return fast() ? fast_idwft(*factor_, c) : idwft(*plan_, c); }

  std::vector<double> error_norms(const DataVector& b) const {
    return fast() ? weierstrass::error_norms(*factor_, b) : weierstrass::error_norms(*plan_, b);
  }

  std::optional<double> condition_estimate() const {
    return plan_ ? std::optional<double>(plan_->condition_estimate()) : std::nullopt;
  }

 private:
  std::optional<SparseFactor> factor_;
  std::optional<TransformPlan> plan_;
};

DataVector load_signal(const RunConfig& config) {
  SignalSpec spec = config.signal;
  spec.n = config.n;
  return generate(spec);
}

Table run_gen(const RunConfig& config) {
  const DataVector b = load_signal(config);
  Table table{"gen", {"i", "x", "value"}, {}, {}};
  const Index n = b.size();
  for (Index i = 0; i < n; ++i)
    table.rows.push_back({std::int64_t{i}, static_cast<double>(i) / static_cast<double>(n), b.values[i].real()});
  table.summary = {{"signal", std::string(to_string(config.signal.kind))}, {"n", std::int64_t{n}}};
  return table;
}

Table run_transform(const RunConfig& config, std::ostream& err) {
  const DataVector b = load_signal(config);
  const Index n = b.size();
  const Transformer transformer(n, config.a, config, err);
  const DataVector c = config.inverse ? transformer.inverse(b) : transformer.forward(b);

  Table table{"transform", {"j", "frequency", "re", "im"}, {}, {}};
  for (Index j = 0; j < n; ++j)
    table.rows.push_back({std::int64_t{j}, column_frequency(j, n, config.convention), c.values[j].real(),
                          c.values[j].imag()});
  table.summary = {{"direction", std::string(config.inverse ? "inverse" : "forward")},
                   {"n", std::int64_t{n}},
                   {"a", config.a},
                   {"convention", std::string(to_string(config.convention))},
                   {"path", transformer.path()}};
  if (auto cond = transformer.condition_estimate()) table.summary.emplace_back("condition_estimate", *cond);
  return table;
}

Table run_compress(const RunConfig& config, std::ostream& err) {
  const DataVector b = load_signal(config);
  const Index n = b.size();
  const Transformer transformer(n, config.a, config, err);
  const DataVector c = transformer.forward(b);
  const DataVector approx = transformer.inverse({truncate_coeffs(c.values, config.k), false});

  Eigen::VectorXcd reconstruction = approx.values;
  const double imag_norm = reconstruction.imag().norm();
  if (b.real_tagged) reconstruction.imag().setZero();
  const Eigen::VectorXcd error = reconstruction - b.values;

  Table table{"compress", {"i", "b", "approx", "error"}, {}, {}};
  for (Index i = 0; i < n; ++i)
    table.rows.push_back({std::int64_t{i}, b.values[i].real(), reconstruction[i].real(), error[i].real()});
  table.summary = {{"k", std::int64_t{config.k}},
                   {"n", std::int64_t{n}},
                   {"a", config.a},
                   {"error_norm", error.norm()},
                   {"max_abs_error", error.cwiseAbs().maxCoeff()},
                   {"discarded_imag_norm", imag_norm},
                   {"path", transformer.path()}};
  return table;
}

Table run_error_curve(const RunConfig& config, std::ostream& err) {
  const DataVector b = load_signal(config);
  const Index n = b.size();
  const Transformer weierstrass_path(n, config.a, config, err);
  const Transformer fourier_path(n, 0.0, config, err);
  const std::vector<double> mu_dwft = weierstrass_path.error_norms(b);
  const std::vector<double> mu_dft = fourier_path.error_norms(b);

  Table table{"error-curve", {"k", "mu_dwft", "mu_dft"}, {}, {}};
  for (std::size_t i = 0; i < mu_dwft.size(); ++i)
    table.rows.push_back({static_cast<std::int64_t>(i + 1), mu_dwft[i], mu_dft[i]});
  table.summary = {{"crossover", std::int64_t{crossover_index(mu_dwft, mu_dft)}},
                   {"n", std::int64_t{n}},
                   {"a", config.a},
                   {"convention", std::string(to_string(config.convention))},
                   {"path", weierstrass_path.path()}};
  return table;
}

// Median wall time of `repeats` calls.
double time_median(int repeats, const std::function<void()>& body) {
  std::vector<double> samples;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    samples.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return samples[samples.size() / 2];
}

Table run_bench(const RunConfig& config) {
  const BenchConfig& bench = config.bench;
  Table table{"bench", {"n", "method", "seconds"}, {}, {}};
  std::mt19937_64 rng(20240601);
  std::normal_distribution<double> normal;

  std::map<std::string, std::map<int, double>> timings;
  for (int p = bench.min_log2; p <= bench.max_log2; ++p) {
    const Index n = Index{1} << p;
    Eigen::VectorXcd v(n);
    for (Index i = 0; i < n; ++i) v[i] = {normal(rng), normal(rng)};
    const DataVector data = DataVector::complex(v);

    const SparseFactor factor(n, config.a, config.convention);
    auto record = [&](const std::string& method, double seconds) {
      table.rows.push_back({std::int64_t{n}, method, seconds});
      timings[method][p] = seconds;
    };
    record("fast_idwft", time_median(bench.repeats, [&] { (void)fast_idwft(factor, data); }));
    record("fast_dwft", time_median(bench.repeats, [&] { (void)fast_dwft(factor, data); }));
    if (p <= bench.dense_max_log2) {
      const TransformPlan plan(n, config.a, PlanOptions{false, config.convention});
      record("dense_idwft", time_median(bench.repeats, [&] { (void)idwft(plan, data); }));
      record("dense_dwft", time_median(bench.repeats, [&] { (void)dwft(plan, data); }));
    }
  }

  // Time growth per 4x size; subquadratic means well under 16.
  for (const auto& [method, by_size] : timings) {
    double worst = 0.0;
    for (const auto& [p, seconds] : by_size)
      if (auto it = by_size.find(p + 2); it != by_size.end() && seconds > 0.0) worst = std::max(worst, it->second / seconds);
    if (worst > 0.0) table.summary.emplace_back(method + "_growth_per_4x", worst);
  }
  std::optional<double> fast_growth;
  for (const auto& [key, value] : table.summary)
    if (key == "fast_idwft_growth_per_4x") fast_growth = std::get<double>(value);
  if (fast_growth) table.summary.emplace_back("fast_idwft_subquadratic", std::string(*fast_growth <= 8.0 ? "yes" : "no"));
  return table;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_parameter(config.a);
    Table table;
    switch (config.command) {
      case Command::gen: table = run_gen(config); break;
      case Command::transform: table = run_transform(config, err); break;
      case Command::compress: table = run_compress(config, err); break;
      case Command::error_curve: table = run_error_curve(config, err); break;
      case Command::bench: table = run_bench(config); break;
    }

    std::ofstream file;
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) {
        err << "error: cannot write " << config.output << '\n';
        return exit_code::data;
      }
    }
    std::ostream& sink = config.output.empty() ? out : file;
    if (config.format == Format::json)
      write_json(table, sink);
    else
      write_csv(table, sink);
    return exit_code::ok;
  } catch (const SingularMatrix& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::numerical;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::data;
  } catch (const EmptyInput& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::data;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::data;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Weierstrass Fourier transform toolkit", "dwft"};
  app.require_subcommand(1);

  RunConfig config;
  std::string signal = "linear";
  std::string format = "csv";
  std::string convention = "literal";
  bool fast = false;
  bool no_fast = false;

  auto add_common = [&](CLI::App* sub, bool with_signal) {
    sub->add_option("--a", config.a, "Self-similarity parameter in [0, 1)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", config.output, "Output file (default: standard output)");
    sub->add_option("--convention", convention, "Column index convention")
        ->check(CLI::IsMember({"literal", "signed"}));
    if (!with_signal) return;
    sub->add_option("--signal", signal, "linear | low-high-sine | step | weierstrass | csv")
        ->check(CLI::IsMember({"linear", "low-high-sine", "step", "weierstrass", "csv"}));
    sub->add_option("--n", config.n, "Sample count (ignored for csv input)");
    sub->add_option("--r", config.signal.ratio, "Weierstrass amplitude ratio in (0, 1)");
    sub->add_option("--csv", config.signal.csv_path, "Input file for --signal csv");
    sub->add_flag("--fast", fast, "Use the FFT-factored path (default for power-of-two n)");
    sub->add_flag("--no-fast", no_fast, "Use the dense path");
  };

  auto* gen = app.add_subcommand("gen", "Generate or load a signal");
  add_common(gen, true);
  auto* transform = app.add_subcommand("transform", "Forward (or --inverse) transform of a signal");
  add_common(transform, true);
  transform->add_flag("--inverse", config.inverse, "Apply the inverse transform");
  auto* compress = app.add_subcommand("compress", "Keep k terms and reconstruct");
  add_common(compress, true);
  compress->add_option("--k", config.k, "Kept terms")->required();
  auto* curve = app.add_subcommand("error-curve", "Error norm versus kept terms, against the DFT");
  add_common(curve, true);
  auto* bench = app.add_subcommand("bench", "Time dense and fast transforms");
  add_common(bench, false);
  bench->add_option("--min-log2", config.bench.min_log2);
  bench->add_option("--max-log2", config.bench.max_log2);
  bench->add_option("--dense-max-log2", config.bench.dense_max_log2);
  bench->add_option("--repeats", config.bench.repeats)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (fast && no_fast) throw CLI::ValidationError("--fast and --no-fast are mutually exclusive");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }

  if (gen->parsed()) config.command = Command::gen;
  if (transform->parsed()) config.command = Command::transform;
  if (compress->parsed()) config.command = Command::compress;
  if (curve->parsed()) config.command = Command::error_curve;
  if (bench->parsed()) config.command = Command::bench;

  if (fast) config.fast = true;
  if (no_fast) config.fast = false;
  config.format = format == "json" ? Format::json : Format::csv;
  config.convention = parse_index_convention(convention);
  config.signal.kind = parse_signal_kind(signal);
  if (config.signal.kind == SignalKind::csv && config.signal.csv_path.empty()) {
    err << "error: --signal csv requires --csv <path>\n";
    return exit_code::usage;
  }
  if (config.bench.min_log2 < 1 || config.bench.max_log2 > 24 || config.bench.min_log2 > config.bench.max_log2) {
    err << "error: bench sizes must satisfy 1 <= --min-log2 <= --max-log2 <= 24\n";
    return exit_code::usage;
  }
  return execute(config, out, err);
}

}  // namespace weierstrass::cli
