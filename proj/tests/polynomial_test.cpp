#include "polyeval/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "polyeval/parser.hpp"
#include "polyeval/ring.hpp"
#include "support/test_support.hpp"

namespace polyeval {
namespace {

Polynomial example_polynomial() {
  return parse_polynomial("3*x^8-x^7+2*x^6+x^5-4*x^4+9*x^3-3*x^2-2*x+1");
}

TEST(Canonicalize, MergesLikeTerms) {
  const Polynomial p = Polynomial::canonicalize(
      {Term{BigInt(1), {1}}, Term{BigInt(1), {1}}}, {"x"});
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.terms()[0].coefficient, BigInt(2));
  EXPECT_EQ(p.terms()[0].exponents, std::vector<std::uint32_t>{1});
}

TEST(Canonicalize, CancellationYieldsZeroPolynomial) {
  const Polynomial p = Polynomial::canonicalize(
      {Term{BigInt(5), {2}}, Term{BigInt(-5), {2}}}, {"x"});
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(Canonicalize, SortsExamplePolynomial) {
  // The nine terms in a shuffled order must come out sorted with (3, [8])
  // first and (1, [0]) last.
  std::vector<Term> raw = {
      Term{BigInt(9), {3}},  Term{BigInt(1), {0}},  Term{BigInt(3), {8}},
      Term{BigInt(-2), {1}}, Term{BigInt(1), {5}},  Term{BigInt(-1), {7}},
      Term{BigInt(-4), {4}}, Term{BigInt(-3), {2}}, Term{BigInt(2), {6}},
  };
  const Polynomial p = Polynomial::canonicalize(std::move(raw), {"x"});
  ASSERT_EQ(p.terms().size(), 9u);
  EXPECT_EQ(p.terms().front().coefficient, BigInt(3));
  EXPECT_EQ(p.terms().front().exponents[0], 8u);
  EXPECT_EQ(p.terms().back().coefficient, BigInt(1));
  EXPECT_EQ(p.terms().back().exponents[0], 0u);
  EXPECT_EQ(p, example_polynomial());
}

TEST(Canonicalize, RejectsExponentWidthMismatch) {
  EXPECT_THROW(
      Polynomial::canonicalize({Term{BigInt(1), {1, 2}}}, {"x"}),
      std::invalid_argument);
}

TEST(Canonicalize, IsIdempotent) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    const Polynomial again =
        Polynomial::canonicalize(p.terms(), p.variables());
    EXPECT_EQ(p, again);
  }
}

TEST(Canonicalize, TermOrderStrictlyDecreasing) {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    for (std::size_t t = 1; t < p.terms().size(); ++t) {
      EXPECT_TRUE(term_order_before(p.terms()[t - 1].exponents,
                                    p.terms()[t].exponents));
    }
  }
}

TEST(Degree, ExamplePolynomial) {
  EXPECT_EQ(example_polynomial().degree(0), 8u);
}

TEST(Degree, Constant) {
  EXPECT_EQ(Polynomial::constant(BigInt(7), {"x"}).degree(0), 0u);
}

TEST(Degree, PicksMaxPerVariable) {
  const Polynomial p = parse_polynomial("x^2*y^3 + x*y^5", {"x", "y"});
  EXPECT_EQ(p.degree(0), 2u);
  EXPECT_EQ(p.degree(1), 5u);
}

TEST(Degree, ZeroPolynomialIsUndefined) {
  EXPECT_THROW(Polynomial::zero({"x"}).degree(0), std::domain_error);
}

TEST(SplitAt, ExampleAtFour) {
  const Polynomial p = example_polynomial();
  const auto [a, b] = p.split_at(0, 4);
  EXPECT_EQ(a, parse_polynomial("3*x^4-x^3+2*x^2+x-4", {"x"}));
  EXPECT_EQ(b, parse_polynomial("9*x^3-3*x^2-2*x+1", {"x"}));
  // Recombination a * x^4 + b must give back p exactly.
  const Polynomial x4 = parse_polynomial("x^4", {"x"});
  EXPECT_EQ(poly_add(poly_mul(a, x4), b), p);
}

TEST(SplitAt, ExampleAtDegree) {
  const Polynomial p = example_polynomial();
  const auto [a, b] = p.split_at(0, 8);
  EXPECT_EQ(a, Polynomial::constant(BigInt(3), {"x"}));
  const Polynomial x8 = parse_polynomial("x^8", {"x"});
  EXPECT_EQ(poly_add(poly_mul(a, x8), b), p);
}

TEST(SplitAt, ZeroRemainder) {
  const Polynomial p = parse_polynomial("x^8+x^5", {"x"});
  const auto [a, b] = p.split_at(0, 4);
  EXPECT_EQ(a, parse_polynomial("x^4+x", {"x"}));
  EXPECT_TRUE(b.is_zero());
}

TEST(SplitAt, RejectsOutOfRange) {
  const Polynomial p = example_polynomial();
  EXPECT_THROW(p.split_at(0, 0), std::invalid_argument);
  EXPECT_THROW(p.split_at(0, 9), std::invalid_argument);
  EXPECT_THROW(Polynomial::zero({"x"}).split_at(0, 1), std::invalid_argument);
}

TEST(SplitAt, RoundTripProperty) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    if (p.is_zero() || p.degree(0) == 0) continue;
    const std::uint32_t degree = p.degree(0);
    const std::uint32_t e =
        std::uniform_int_distribution<std::uint32_t>(1, degree)(rng);
    const auto [a, b] = p.split_at(0, e);
    EXPECT_FALSE(a.is_zero());
    Polynomial xe = Polynomial::canonicalize({Term{BigInt(1), {e}}}, {"x"});
    EXPECT_EQ(poly_add(poly_mul(a, xe), b), p) << "e=" << e;
  }
}

}  // namespace
}  // namespace polyeval
