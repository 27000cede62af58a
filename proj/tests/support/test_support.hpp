#pragma once

// Shared test helpers: independent evaluation oracles, exact dyadic
// rationals for float containment checks, a counting ring domain, and
// seeded random polynomial generators. Everything here stays deliberately
// naive so it cannot share a bug with the code under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "polyeval/bigint.hpp"
#include "polyeval/polynomial.hpp"
#include "polyeval/ring.hpp"

namespace polyeval::testing {

/// Term-by-term sum with naive repeated multiplication for the powers.
template <RingDomain D>
typename D::Value brute_force_eval(const Polynomial& p,
                                   std::span<const typename D::Value> point,
                                   const D& domain) {
  typename D::Value acc = domain.zero();
  for (const Term& term : p.terms()) {
    typename D::Value value = domain.from_integer(term.coefficient);
    for (std::size_t v = 0; v < term.exponents.size(); ++v) {
      for (std::uint32_t i = 0; i < term.exponents[v]; ++i) {
        value = domain.mul(value, point[v]);
      }
    }
    acc = domain.add(acc, value);
  }
  return acc;
}

/// Exact dyadic rational value = numerator * 2^exponent. Closed under
/// addition and multiplication, so polynomials with integer coefficients
/// can be evaluated exactly at any double point.
struct Dyadic {
  BigInt numerator;
  std::int64_t exponent = 0;

  static Dyadic from_integer(const BigInt& value) { return {value, 0}; }

  static Dyadic from_double(double value) {
    if (value == 0.0) return {BigInt(0), 0};
    int exp = 0;
    const double frac = std::frexp(value, &exp);
    const auto mantissa = static_cast<std::int64_t>(std::ldexp(frac, 53));
    return {BigInt(mantissa), exp - 53};
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const std::int64_t exp = std::min(a.exponent, b.exponent);
    BigInt na = a.numerator;
    na <<= static_cast<std::size_t>(a.exponent - exp);
    BigInt nb = b.numerator;
    nb <<= static_cast<std::size_t>(b.exponent - exp);
    return {na + nb, exp};
  }

  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return {a.numerator * b.numerator, a.exponent + b.exponent};
  }

  // Comparison via cross-scaling to a common exponent.
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const std::int64_t exp = std::min(a.exponent, b.exponent);
    BigInt na = a.numerator;
    na <<= static_cast<std::size_t>(a.exponent - exp);
    BigInt nb = b.numerator;
    nb <<= static_cast<std::size_t>(b.exponent - exp);
    return na <=> nb;
  }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

/// Exact evaluation of an integer polynomial at a double point.
inline Dyadic exact_eval_at_double(const Polynomial& p, double point) {
  const Dyadic x = Dyadic::from_double(point);
  Dyadic acc = Dyadic::from_integer(BigInt(0));
  for (const Term& term : p.terms()) {
    Dyadic value = Dyadic::from_integer(term.coefficient);
    for (std::uint32_t i = 0; i < term.exponents[0]; ++i) value = value * x;
    acc = acc + value;
  }
  return acc;
}

struct OpCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  void reset() { adds = muls = 0; }
};

/// Wraps a domain and counts add/mul calls through a shared counter, so a
/// copy held inside an Evaluator still reports.
template <RingDomain Inner>
struct CountingDomain {
  using Value = typename Inner::Value;
  static constexpr bool exact = Inner::exact;

  Inner inner;
  std::shared_ptr<OpCounts> counts = std::make_shared<OpCounts>();

  Value zero() const { return inner.zero(); }
  Value add(const Value& a, const Value& b) const {
    ++counts->adds;
    return inner.add(a, b);
  }
  Value mul(const Value& a, const Value& b) const {
    ++counts->muls;
    return inner.mul(a, b);
  }
  Value from_integer(const BigInt& c) const { return inner.from_integer(c); }
};

/// Random integer in [-2^magnitude_bits, 2^magnitude_bits], never zero.
inline BigInt random_coefficient(std::uint32_t magnitude_bits,
                                 std::mt19937_64& rng) {
  const std::uint32_t bits =
      std::uniform_int_distribution<std::uint32_t>(1, magnitude_bits)(rng);
  std::vector<std::uint64_t> words((bits + 63) / 64);
  for (auto& word : words) word = rng();
  if (bits % 64 != 0) words.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
  BigInt value = BigInt::from_words(words, rng() % 2 == 0);
  while (value.is_zero()) {
    value = BigInt(static_cast<std::int64_t>(rng() % 255) - 127);
  }
  return value;
}

struct RandomPolyOptions {
  std::uint32_t max_degree = 64;
  std::uint32_t max_terms = 64;
  std::uint32_t coeff_magnitude_bits = 16;
  bool force_dense = false;
};

/// Random univariate polynomial: dense or sparse with distinct exponents.
inline Polynomial random_polynomial(const RandomPolyOptions& options,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> degree_dist(0,
                                                           options.max_degree);
  const std::uint32_t degree = degree_dist(rng);
  std::set<std::uint32_t> exponents = {degree};
  if (options.force_dense || rng() % 2 == 0) {
    for (std::uint32_t e = 0; e < degree; ++e) exponents.insert(e);
  } else {
    const std::uint32_t want = std::min(
        options.max_terms,
        std::uniform_int_distribution<std::uint32_t>(1, degree + 1)(rng));
    while (exponents.size() < want) {
      exponents.insert(
          std::uniform_int_distribution<std::uint32_t>(0, degree)(rng));
    }
  }
  std::vector<Term> terms;
  terms.reserve(exponents.size());
  for (const std::uint32_t e : exponents) {
    terms.push_back(
        Term{random_coefficient(options.coeff_magnitude_bits, rng), {e}});
  }
  return Polynomial::canonicalize(std::move(terms), {"x"});
}

}  // namespace polyeval::testing
