#include "polyeval/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "polyeval/error.hpp"
#include "polyeval/eval.hpp"
#include "polyeval/tree.hpp"

namespace polyeval {
namespace {

using Clock = std::chrono::steady_clock;

void validate_spec(const BenchSpec& spec) {
  if (spec.repetitions < 3) {
    throw std::invalid_argument("benchmark needs at least 3 repetitions");
  }
  if (spec.degrees.empty()) {
    throw std::invalid_argument("benchmark needs at least one degree");
  }
  if (spec.coeff_bits < 1 || spec.point_bits < 1) {
    throw std::invalid_argument("bit sizes must be >= 1");
  }
  if (spec.schemes.empty()) {
    throw std::invalid_argument("benchmark needs at least one scheme");
  }
  if (spec.workers.empty()) {
    throw std::invalid_argument("benchmark needs at least one worker count");
  }
  for (unsigned w : spec.workers) {
    if (w < 1) throw std::invalid_argument("worker counts must be >= 1");
  }
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint32_t degree) {
  // Distinct, reproducible stream per (seed, degree) grid point.
  return std::mt19937_64(seed ^ (0x9e3779b97f4a7c15ull * (degree + 1)));
}

std::uint64_t median_of(std::vector<std::uint64_t> samples) {
  std::sort(samples.begin(), samples.end());
  return samples[(samples.size() - 1) / 2];
}

struct TimedRun {
  std::uint64_t median_ns = 0;
  std::uint64_t setup_ns = 0;
  BigInt result;
};

TimedRun time_scheme(const Polynomial& p, const FunctionScheme& scheme,
                     const BigInt& point, unsigned workers,
                     std::uint32_t repetitions) {
  TimedRun out;
  const auto setup_start = Clock::now();
  EvaluationTree tree = build(p, scheme, 0);
  compute_lazy_heights(tree);
  const CompiledProgram program = compile(tree);
  Evaluator<BigIntDomain> session(BigIntDomain{}, program);
  const std::span<const BigInt> at(&point, 1);

  // Warm run: builds and caches the power tables so the timed loop
  // measures the walk alone.
  out.result = workers > 1 ? session.evaluate_parallel(at, workers)
                           : session.evaluate(at);
  out.setup_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                           setup_start)
          .count());
  std::vector<std::uint64_t> samples;
  samples.reserve(repetitions);
  for (std::uint32_t rep = 0; rep < repetitions; ++rep) {
    const auto start = Clock::now();
    BigInt value = workers > 1 ? session.evaluate_parallel(at, workers)
                               : session.evaluate(at);
    const auto stop = Clock::now();
    if (!(value == out.result)) {
      throw std::logic_error("benchmark run produced an unstable result");
    }
    samples.push_back(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
            .count()));
  }
  out.median_ns = median_of(std::move(samples));
  return out;
}

}  // namespace

BigInt random_bits(std::uint32_t bits, std::mt19937_64& rng) {
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> magnitude(words);
  for (auto& word : magnitude) word = rng();
  if (bits % 64 != 0) {
    magnitude.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  }
  return BigInt::from_words(magnitude);
}

BigInt random_point(std::uint32_t bits, std::mt19937_64& rng) {
  return random_bits(bits - 1, rng) + BigInt::power_of_two(bits - 1);
}

Polynomial random_dense_polynomial(std::uint32_t degree,
                                   std::uint32_t coeff_bits,
                                   std::mt19937_64& rng) {
  std::vector<Term> terms;
  terms.reserve(degree + 1);
  for (std::uint32_t e = 0; e <= degree; ++e) {
    BigInt coeff = random_bits(coeff_bits, rng);
    while (coeff.is_zero()) coeff = random_bits(coeff_bits, rng);
    terms.push_back(Term{std::move(coeff), {degree - e}});
  }
  return Polynomial::canonicalize(std::move(terms), {"x"});
}

std::vector<BenchRecord> run_grid(const BenchSpec& spec) {
  validate_spec(spec);
  std::vector<BenchRecord> records;
  const FunctionScheme balanced = builtin_scheme(BuiltinScheme::balanced);

  for (const std::uint32_t degree : spec.degrees) {
    std::mt19937_64 rng = instance_rng(spec.seed, degree);
    const Polynomial p =
        random_dense_polynomial(degree, spec.coeff_bits, rng);
    const BigInt point = random_point(spec.point_bits, rng);

    // Correctness gate: every scheme must agree on the instance before any
    // timing is recorded.
    const std::span<const BigInt> at(&point, 1);
    BigIntDomain domain;
    EvaluationTree reference_tree = build(p, balanced, 0);
    compute_lazy_heights(reference_tree);
    const BigInt expected =
        evaluate(compile(reference_tree), at, domain);
    for (const FunctionScheme& scheme : spec.schemes) {
      EvaluationTree tree = build(p, scheme, 0);
      compute_lazy_heights(tree);
      if (!(evaluate(compile(tree), at, domain) == expected)) {
        throw std::logic_error("schemes disagree on benchmark instance: " +
                               scheme.name());
      }
    }

    const TimedRun baseline = time_scheme(p, balanced, point, 1,
                                          spec.repetitions);
    for (const FunctionScheme& scheme : spec.schemes) {
      for (const unsigned workers : spec.workers) {
        TimedRun run =
            scheme.name() == "balanced" && workers == 1
                ? baseline
                : time_scheme(p, scheme, point, workers, spec.repetitions);
        BenchRecord record;
        record.scheme = scheme.name();
        record.degree = degree;
        record.term_count = static_cast<std::uint32_t>(p.terms().size());
        record.coeff_bits = spec.coeff_bits;
        record.point_bits = spec.point_bits;
        record.workers = workers;
        record.repetitions = spec.repetitions;
        record.median_ns = run.median_ns;
        record.setup_ns = run.setup_ns;
        record.ratio_vs_balanced =
            record.scheme == "balanced" && workers == 1
                ? 1.0
                : static_cast<double>(run.median_ns) /
                      static_cast<double>(baseline.median_ns);
        records.push_back(std::move(record));
      }
    }
  }

  std::sort(records.begin(), records.end(),
            [](const BenchRecord& a, const BenchRecord& b) {
              return std::tie(a.degree, a.scheme, a.workers) <
                     std::tie(b.degree, b.scheme, b.workers);
            });
  return records;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& os) {
  os << "scheme,degree,terms,coeff_bits,point_bits,workers,reps,median_ns,"
        "ratio_vs_balanced\n";
  for (const BenchRecord& record : records) {
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(4) << record.ratio_vs_balanced;
    os << record.scheme << ',' << record.degree << ',' << record.term_count
       << ',' << record.coeff_bits << ',' << record.point_bits << ','
       << record.workers << ',' << record.repetitions << ','
       << record.median_ns << ',' << ratio.str() << '\n';
  }
}

void write_csv(const std::vector<BenchRecord>& records,
               const std::filesystem::path& destination) {
  std::ofstream file(destination);
  if (!file) {
    throw IoError("cannot open '" + destination.string() + "' for writing");
  }
  write_csv(records, file);
  if (!file.good()) {
    throw IoError("failed while writing '" + destination.string() + "'");
  }
}

}  // namespace polyeval
