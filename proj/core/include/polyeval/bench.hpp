#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "polyeval/bigint.hpp"
#include "polyeval/polynomial.hpp"
#include "polyeval/scheme.hpp"

namespace polyeval {

/// Grid description for a benchmark run. Degrees can come from an explicit
/// list or an inclusive start:stop:step progression (the CLI parses both into
/// the flat list).
struct BenchSpec {
  std::vector<FunctionScheme> schemes;
  std::vector<std::uint32_t> degrees;
  std::uint32_t coeff_bits = 64;
  std::uint32_t point_bits = 64;
  std::vector<unsigned> workers = {1};
  std::uint32_t repetitions = 5;
  std::uint64_t seed = 0;
};

struct BenchRecord {
  std::string scheme;
  std::uint32_t degree = 0;
  std::uint32_t term_count = 0;
  std::uint32_t coeff_bits = 0;
  std::uint32_t point_bits = 0;
  unsigned workers = 1;
  std::uint32_t repetitions = 0;
  std::uint64_t median_ns = 0;
  double ratio_vs_balanced = 0.0;
  /// One-time build + compile + power-table cost; kept out of median_ns and
  /// out of the CSV, surfaced by the CLI on request.
  std::uint64_t setup_ns = 0;
};

/// Uniform value in [0, 2^bits).
BigInt random_bits(std::uint32_t bits, std::mt19937_64& rng);

/// Uniform value in [2^(bits-1), 2^bits): exactly `bits` bits wide.
BigInt random_point(std::uint32_t bits, std::mt19937_64& rng);

/// Dense univariate polynomial of the given degree with nonzero uniform
/// coefficients of `coeff_bits` bits each.
Polynomial random_dense_polynomial(std::uint32_t degree,
                                   std::uint32_t coeff_bits,
                                   std::mt19937_64& rng);

/// Runs the grid: per degree, one seeded random dense polynomial and point;
/// per (scheme, workers), the evaluation is compiled once, power tables are
/// warmed, and the median wall time of `repetitions` evaluations is recorded.
/// A balanced workers=1 run at the same parameters is always timed as the
/// normalization baseline; its ratio is exactly 1. Before any timing, all
/// schemes are checked to produce identical results on the instance.
///
/// Timing covers the walk only; compilation and power-table construction are
/// excluded. Grid points run sequentially; threads are used only inside
/// evaluate_parallel when workers > 1.
std::vector<BenchRecord> run_grid(const BenchSpec& spec);

/// CSV with the exact header
/// `scheme,degree,terms,coeff_bits,point_bits,workers,reps,median_ns,ratio_vs_balanced`,
/// one row per record sorted by (degree, scheme, workers), ratios with 4
/// decimal places.
void write_csv(const std::vector<BenchRecord>& records, std::ostream& os);

/// Same, to a file; throws IoError if the destination cannot be opened.
void write_csv(const std::vector<BenchRecord>& records,
               const std::filesystem::path& destination);

}  // namespace polyeval
