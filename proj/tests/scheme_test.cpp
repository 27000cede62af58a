#include "polyeval/scheme.hpp"

#include <gtest/gtest.h>

#include <bit>

namespace polyeval {
namespace {

TEST(BuiltinSchemes, SplitValues) {
  EXPECT_EQ(builtin_scheme(BuiltinScheme::direct).split(5), 5u);
  EXPECT_EQ(builtin_scheme(BuiltinScheme::horner).split(5), 1u);
  EXPECT_EQ(builtin_scheme(BuiltinScheme::horner).split(1u << 20), 1u);

  const FunctionScheme estrin = builtin_scheme(BuiltinScheme::estrin);
  EXPECT_EQ(estrin.split(7), 4u);
  EXPECT_EQ(estrin.split(8), 8u);
  EXPECT_EQ(estrin.split(9), 8u);
  EXPECT_EQ(estrin.split(1), 1u);

  const FunctionScheme balanced = builtin_scheme(BuiltinScheme::balanced);
  EXPECT_EQ(balanced.split(8), 4u);
  EXPECT_EQ(balanced.split(1), 1u);  // ceil keeps the split positive at k=1
  EXPECT_EQ(balanced.split(9), 5u);
}

TEST(BuiltinSchemes, Names) {
  EXPECT_EQ(builtin_scheme(BuiltinScheme::direct).name(), "direct");
  EXPECT_EQ(builtin_scheme(BuiltinScheme::horner).name(), "horner");
  EXPECT_EQ(builtin_scheme(BuiltinScheme::estrin).name(), "estrin");
  EXPECT_EQ(builtin_scheme(BuiltinScheme::balanced).name(), "balanced");
}

TEST(ThresholdCombine, EstrinOverHorner) {
  const FunctionScheme combined =
      threshold_combine(builtin_scheme(BuiltinScheme::estrin),
                        builtin_scheme(BuiltinScheme::horner), 10);
  EXPECT_EQ(combined.split(16), 16u);
  EXPECT_EQ(combined.split(10), 1u);
  EXPECT_EQ(combined.split(11), 8u);
  EXPECT_EQ(combined.name(), "estrin:horner@10");
}

TEST(ThresholdCombine, SchemeWithItselfIsIdentity) {
  const FunctionScheme combined =
      threshold_combine(builtin_scheme(BuiltinScheme::direct),
                        builtin_scheme(BuiltinScheme::direct), 5);
  for (std::uint64_t k = 1; k <= 20; ++k) EXPECT_EQ(combined.split(k), k);
}

TEST(ThresholdCombine, BranchesAtCutoff) {
  const FunctionScheme combined =
      threshold_combine(builtin_scheme(BuiltinScheme::balanced),
                        builtin_scheme(BuiltinScheme::horner), 2);
  EXPECT_EQ(combined.split(3), 2u);  // balanced side: ceil(3/2) = 2
  EXPECT_EQ(combined.split(4), 2u);
}

TEST(ThresholdCombine, RejectsZeroCutoff) {
  EXPECT_THROW(threshold_combine(builtin_scheme(BuiltinScheme::direct),
                                 builtin_scheme(BuiltinScheme::horner), 0),
               std::invalid_argument);
}

TEST(Validate, HornerIsValidToAMillion) {
  EXPECT_FALSE(validate(builtin_scheme(BuiltinScheme::horner), 1'000'000));
}

TEST(Validate, UpperBoundViolation) {
  const FunctionScheme bad{"too-big",
                           [](std::uint64_t k) { return k + 1; }};
  const auto violation = validate(bad, 5);
  ASSERT_TRUE(violation);
  EXPECT_EQ(violation->k, 1u);
  EXPECT_EQ(violation->value, 2u);
}

TEST(Validate, UnclampedHalfViolatesAtOne) {
  const FunctionScheme unclamped{"half", [](std::uint64_t k) { return k / 2; }};
  const auto violation = validate(unclamped, 5);
  ASSERT_TRUE(violation);
  EXPECT_EQ(violation->k, 1u);
  EXPECT_EQ(violation->value, 0u);
}

TEST(Validate, AllBuiltinsValidToTwoToTwenty) {
  for (const BuiltinScheme which :
       {BuiltinScheme::direct, BuiltinScheme::horner, BuiltinScheme::estrin,
        BuiltinScheme::balanced}) {
    EXPECT_FALSE(validate(builtin_scheme(which), 1u << 20));
  }
}

TEST(SchemeProperties, EstrinSplitIsFloorPowerOfTwo) {
  const FunctionScheme estrin = builtin_scheme(BuiltinScheme::estrin);
  for (std::uint64_t k = 1; k <= 5000; ++k) {
    const std::uint64_t e = estrin.split(k);
    EXPECT_TRUE(std::has_single_bit(e));
    EXPECT_LE(e, k);
    EXPECT_LT(k, 2 * e);
  }
}

TEST(SchemeProperties, BalancedSplitsWithinOneOfHalf) {
  const FunctionScheme balanced = builtin_scheme(BuiltinScheme::balanced);
  for (std::uint64_t k = 2; k <= 5000; ++k) {
    EXPECT_EQ(k - balanced.split(k), k / 2);
  }
}

}  // namespace
}  // namespace polyeval
