// polyeval: compile polynomials into evaluation trees, evaluate them over
// several numeric domains, and benchmark the evaluation schemes.
//
// Exit codes: 0 success, 1 polynomial parse error, 2 unknown scheme,
// 3 binding/domain error, 4 I/O error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyeval/bench.hpp"
#include "polyeval/error.hpp"
#include "polyeval/eval.hpp"
#include "polyeval/parser.hpp"
#include "polyeval/powers.hpp"
#include "polyeval/ring.hpp"
#include "polyeval/tree.hpp"
#include "scheme_name.hpp"

namespace {

using namespace polyeval;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitScheme = 2;
constexpr int kExitBinding = 3;
constexpr int kExitIo = 4;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

FunctionScheme require_scheme(const std::string& name) {
  auto scheme = cli::scheme_from_name(name);
  if (!scheme) throw UnknownSchemeError("unknown scheme '" + name + "'");
  return std::move(*scheme);
}

Polynomial parse_input_polynomial(const std::string& text,
                                  const std::string& var_order) {
  if (var_order.empty()) return parse_polynomial(text);
  return parse_polynomial(text, split_list(var_order));
}

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_interval(const Interval& value) {
  return "[" + format_double(value.lo) + "," + format_double(value.hi) + "]";
}

// "a:b:c" inclusive progression, or a comma list of degrees.
std::vector<std::uint32_t> parse_degrees(const std::string& text) {
  std::vector<std::uint32_t> out;
  if (text.find(':') != std::string::npos) {
    std::uint32_t start = 0;
    std::uint32_t stop = 0;
    std::uint32_t step = 1;
    char extra = 0;
    std::stringstream stream(text);
    char sep1 = 0;
    char sep2 = 0;
    if (!(stream >> start >> sep1 >> stop) || sep1 != ':') {
      throw CLI::ValidationError("--degrees", "expected start:stop[:step]");
    }
    if (stream >> sep2 >> step) {
      if (sep2 != ':' || step == 0) {
        throw CLI::ValidationError("--degrees", "expected start:stop[:step]");
      }
    }
    if (stream >> extra) {
      throw CLI::ValidationError("--degrees", "trailing characters");
    }
    for (std::uint32_t d = start; d <= stop; d += step) out.push_back(d);
    return out;
  }
  for (const std::string& item : split_list(text)) {
    std::uint32_t value = 0;
    const auto result =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (result.ec != std::errc() || result.ptr != item.data() + item.size()) {
      throw CLI::ValidationError("--degrees", "bad degree '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<FunctionScheme> schemes_per_variable(const FunctionScheme& scheme,
                                                 std::size_t count) {
  std::vector<FunctionScheme> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(scheme);
  return out;
}

EvaluationTree build_for(const Polynomial& p, const FunctionScheme& scheme) {
  if (p.variables().size() <= 1) return build(p, scheme, 0);
  const auto schemes = schemes_per_variable(scheme, p.variables().size());
  return build_multivariate(p, schemes);
}

int cmd_compile(const std::string& poly_text, const std::string& scheme_name,
                const std::string& var_order, const std::string& dot_path,
                bool stats) {
  const Polynomial p = parse_input_polynomial(poly_text, var_order);
  const FunctionScheme scheme = require_scheme(scheme_name);
  EvaluationTree tree = build_for(p, scheme);
  compute_lazy_heights(tree);

  if (!dot_path.empty()) {
    std::ofstream file(dot_path);
    if (!file) throw IoError("cannot open '" + dot_path + "' for writing");
    file << to_dot(tree);
    if (!file.good()) throw IoError("failed while writing '" + dot_path + "'");
  }
  if (stats) {
    const CompiledProgram program = compile(tree);
    std::cout << "nodes: " << tree.nodes.size() << "\n"
              << "max_partial_degree: " << max_partial_degree(tree) << "\n"
              << "max_lazy_height: " << max_lazy_height(tree) << "\n";
    for (std::size_t v = 0;
         v < program.exponent_sets.size() && v < tree.variables.size(); ++v) {
      std::cout << "exponents[" << tree.variables[v]
                << "]: " << program.exponent_sets[v].size() << "\n";
    }
  }
  return kExitOk;
}

int cmd_eval(const std::string& poly_text, const std::string& scheme_name,
             const std::string& domain_name, const std::string& at,
             unsigned workers) {
  const Polynomial p = parse_input_polynomial(poly_text, "");
  const FunctionScheme scheme = require_scheme(scheme_name);
  EvaluationTree tree = build_for(p, scheme);
  compute_lazy_heights(tree);
  const CompiledProgram program = compile(tree);

  DomainTag tag;
  if (domain_name == "int") {
    tag = DomainTag::integer;
  } else if (domain_name == "float") {
    tag = DomainTag::real;
  } else if (domain_name == "interval") {
    tag = DomainTag::interval;
  } else {
    throw BindingError("unknown domain '" + domain_name + "'");
  }
  const PointAssignment point = parse_point(at, p.variables(), tag);

  switch (tag) {
    case DomainTag::integer: {
      std::vector<BigInt> values;
      values.reserve(point.values.size());
      for (const auto& v : point.values) values.push_back(std::get<BigInt>(v));
      Evaluator<BigIntDomain> session(BigIntDomain{}, program);
      const BigInt result = workers > 1
                                ? session.evaluate_parallel(values, workers)
                                : session.evaluate(values);
      std::cout << result.to_decimal() << "\n";
      break;
    }
    case DomainTag::real: {
      std::vector<double> values;
      values.reserve(point.values.size());
      for (const auto& v : point.values) values.push_back(std::get<double>(v));
      Evaluator<DoubleDomain> session(DoubleDomain{}, program);
      const double result = workers > 1
                                ? session.evaluate_parallel(values, workers)
                                : session.evaluate(values);
      std::cout << format_double(result) << "\n";
      break;
    }
    case DomainTag::interval: {
      std::vector<Interval> values;
      values.reserve(point.values.size());
      for (const auto& v : point.values) {
        values.push_back(std::get<Interval>(v));
      }
      Evaluator<IntervalDomain> session(IntervalDomain{}, program);
      const Interval result = workers > 1
                                  ? session.evaluate_parallel(values, workers)
                                  : session.evaluate(values);
      std::cout << format_interval(result) << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_bench(const std::string& scheme_names, const std::string& degrees,
              std::uint32_t coeff_bits, std::uint32_t point_bits,
              const std::string& workers, std::uint32_t reps,
              std::uint64_t seed, const std::string& csv_path,
              bool report_setup) {
  BenchSpec spec;
  for (const std::string& name : split_list(scheme_names)) {
    spec.schemes.push_back(require_scheme(name));
  }
  spec.degrees = parse_degrees(degrees);
  spec.coeff_bits = coeff_bits;
  spec.point_bits = point_bits;
  spec.repetitions = reps;
  spec.seed = seed;
  if (!workers.empty()) {
    spec.workers.clear();
    for (const std::string& item : split_list(workers)) {
      unsigned value = 0;
      const auto result =
          std::from_chars(item.data(), item.data() + item.size(), value);
      if (result.ec != std::errc()) {
        throw CLI::ValidationError("--workers", "bad worker count");
      }
      spec.workers.push_back(value);
    }
  }

  const std::vector<BenchRecord> records = run_grid(spec);
  if (!csv_path.empty()) write_csv(records, std::filesystem::path(csv_path));

  std::uint32_t current_degree = 0;
  bool first = true;
  for (const BenchRecord& record : records) {
    if (first || record.degree != current_degree) {
      if (!first) std::cout << "\n";
      current_degree = record.degree;
      first = false;
      std::cout << "degree " << record.degree << " (" << record.term_count
                << " terms):";
    }
    std::ostringstream ratio;
    ratio.precision(4);
    ratio << std::fixed << record.ratio_vs_balanced;
    std::cout << " " << record.scheme << "/w" << record.workers << " "
              << record.median_ns << "ns [" << ratio.str() << "]";
    if (report_setup) std::cout << " setup=" << record.setup_ns << "ns";
  }
  if (!first) std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial evaluation compiler and benchmark harness"};
  app.require_subcommand(1);

  std::string poly_text;
  std::string scheme_name = "balanced";
  std::string var_order;
  std::string dot_path;
  bool stats = false;

  CLI::App* compile_cmd =
      app.add_subcommand("compile", "build and inspect an evaluation tree");
  compile_cmd->add_option("polynomial", poly_text, "polynomial expression")
      ->required();
  compile_cmd->add_option("--scheme", scheme_name,
                          "evaluation scheme (direct, horner, estrin, "
                          "balanced, or upper:lower@N)");
  compile_cmd->add_option("--var-order", var_order,
                          "comma-separated variable order");
  compile_cmd->add_option("--dot", dot_path, "write the tree as DOT");
  compile_cmd->add_flag("--stats", stats, "print tree statistics");

  std::string domain_name = "int";
  std::string at;
  unsigned workers = 1;

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a polynomial at a point");
  eval_cmd->add_option("polynomial", poly_text, "polynomial expression")
      ->required();
  eval_cmd->add_option("--scheme", scheme_name, "evaluation scheme");
  eval_cmd->add_option("--domain", domain_name, "int, float, or interval");
  eval_cmd->add_option("--at", at, "bindings, e.g. \"x=2,y=[1,2]\"");
  eval_cmd->add_option("--workers", workers, "parallel worker threads");

  std::string bench_schemes = "balanced";
  std::string degrees = "256";
  std::uint32_t coeff_bits = 64;
  std::uint32_t point_bits = 64;
  std::string bench_workers;
  std::uint32_t reps = 5;
  std::uint64_t seed = 0;
  std::string csv_path;
  bool report_setup = false;

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time schemes over a degree grid");
  bench_cmd->add_option("--schemes", bench_schemes, "comma-separated schemes");
  bench_cmd->add_option("--degrees", degrees, "start:stop[:step] or list");
  bench_cmd->add_option("--coeff-bits", coeff_bits, "coefficient bit size");
  bench_cmd->add_option("--point-bits", point_bits, "point bit size");
  bench_cmd->add_option("--workers", bench_workers,
                        "comma-separated worker counts");
  bench_cmd->add_option("--reps", reps, "repetitions per grid point");
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_option("--csv", csv_path, "CSV output path");
  bench_cmd->add_flag("--report-setup", report_setup,
                      "also print per-run compile and power-table setup time");

  try {
    app.parse(argc, argv);
    if (compile_cmd->parsed()) {
      return cmd_compile(poly_text, scheme_name, var_order, dot_path, stats);
    }
    if (eval_cmd->parsed()) {
      return cmd_eval(poly_text, scheme_name, domain_name, at, workers);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench_schemes, degrees, coeff_bits, point_bits,
                       bench_workers, reps, seed, csv_path, report_setup);
    }
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.position()
              << "\n";
    return kExitParse;
  } catch (const UnknownSchemeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScheme;
  } catch (const BindingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBinding;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBinding;
  }
}
