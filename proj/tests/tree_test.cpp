#include "polyeval/tree.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "polyeval/parser.hpp"
#include "support/test_support.hpp"

namespace polyeval {
namespace {

Polynomial example_polynomial() {
  return parse_polynomial("3*x^8-x^7+2*x^6+x^5-4*x^4+9*x^3-3*x^2-2*x+1");
}

EvaluationTree build_annotated(const Polynomial& p, BuiltinScheme which) {
  EvaluationTree tree = build(p, builtin_scheme(which), 0);
  compute_lazy_heights(tree);
  return tree;
}

// Depth-first degree-sum check: every node's partial degrees summed along
// its path to the root must equal the degree of its monomial, which for the
// flat layout means tree_to_polynomial reproduces the source exactly.
void expect_structurally_valid(const EvaluationTree& tree) {
  ASSERT_FALSE(tree.nodes.empty());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    for (std::size_t c = 0; c < node.children.size(); ++c) {
      EXPECT_LT(node.children[c], i) << "child index below parent";
      EXPECT_EQ(tree.nodes[node.children[c]].parent, i);
      if (c > 0) {
        EXPECT_GT(node.children[c], node.children[c - 1])
            << "children in decreasing term order";
      }
    }
  }
  EXPECT_FALSE(tree.root().parent.has_value());
}

TEST(Build, HornerChain) {
  const EvaluationTree tree = build_annotated(example_polynomial(),
                                              BuiltinScheme::horner);
  ASSERT_EQ(tree.nodes.size(), 9u);
  const TreeNode& root = tree.root();
  EXPECT_EQ(root.coeff, BigInt(1));
  EXPECT_EQ(root.partial_degree, 0u);
  for (std::size_t i = 0; i + 1 < tree.nodes.size(); ++i) {
    EXPECT_EQ(tree.nodes[i].partial_degree, 1u);
    EXPECT_LE(tree.nodes[i].children.size(), 1u);
  }
  EXPECT_EQ(tree.nodes[0].coeff, BigInt(3));  // innermost node
  EXPECT_TRUE(tree.nodes[0].children.empty());
  expect_structurally_valid(tree);
}

TEST(Build, BalancedHasLowerPartialDegreesThanEstrin) {
  const EvaluationTree balanced = build_annotated(example_polynomial(),
                                                  BuiltinScheme::balanced);
  const EvaluationTree estrin = build_annotated(example_polynomial(),
                                                BuiltinScheme::estrin);
  EXPECT_EQ(max_partial_degree(balanced), 4u);
  EXPECT_EQ(max_partial_degree(estrin), 8u);
}

TEST(Build, SingleTermIsOneNode) {
  const Polynomial p = parse_polynomial("7*x^3");
  for (const BuiltinScheme which :
       {BuiltinScheme::direct, BuiltinScheme::horner, BuiltinScheme::estrin,
        BuiltinScheme::balanced}) {
    const EvaluationTree tree = build_annotated(p, which);
    ASSERT_EQ(tree.nodes.size(), 1u);
    EXPECT_EQ(tree.root().coeff, BigInt(7));
    EXPECT_EQ(tree.root().partial_degree, 3u);
  }
}

TEST(Build, ZeroPolynomialIsDegenerateNode) {
  const EvaluationTree tree =
      build(Polynomial::zero({"x"}), builtin_scheme(BuiltinScheme::balanced),
            0);
  ASSERT_EQ(tree.nodes.size(), 1u);
  EXPECT_TRUE(tree.root().coeff.is_zero());
  EXPECT_EQ(tree.root().partial_degree, 0u);
}

TEST(Build, RejectsNonUnivariate) {
  const Polynomial p = parse_polynomial("x*y", {"x", "y"});
  EXPECT_THROW(build(p, builtin_scheme(BuiltinScheme::horner), 0),
               std::invalid_argument);
}

TEST(Build, RejectsInvalidScheme) {
  const FunctionScheme bad{"bad", [](std::uint64_t) { return std::uint64_t{0}; }};
  EXPECT_THROW(build(example_polynomial(), bad, 0), std::invalid_argument);
}

TEST(LazyHeights, WorkedExampleValues) {
  EXPECT_EQ(max_lazy_height(
                build_annotated(example_polynomial(), BuiltinScheme::horner)),
            0u);
  EXPECT_EQ(max_lazy_height(
                build_annotated(example_polynomial(), BuiltinScheme::direct)),
            1u);
  EXPECT_EQ(max_lazy_height(build_annotated(example_polynomial(),
                                            BuiltinScheme::balanced)),
            1u);
  // Mechanically applying the lazy-height recurrence to the Estrin tree of
  // the example yields 2 (root children: leaf, lh-1 subtree, two lh-0
  // subtrees), which is what the implementation must report.
  EXPECT_EQ(max_lazy_height(
                build_annotated(example_polynomial(), BuiltinScheme::estrin)),
            2u);
}

TEST(LazyHeights, HornerIsAlwaysZero) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    const EvaluationTree tree = build_annotated(p, BuiltinScheme::horner);
    EXPECT_EQ(max_lazy_height(tree), 0u);
  }
}

TEST(LazyHeights, LogarithmicBound) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    for (const BuiltinScheme which :
         {BuiltinScheme::direct, BuiltinScheme::horner, BuiltinScheme::estrin,
          BuiltinScheme::balanced}) {
      const EvaluationTree tree = build_annotated(p, which);
      const auto bound = static_cast<std::uint32_t>(
          std::bit_width(tree.nodes.size()) - 1);  // floor(log2(nodes))
      EXPECT_LE(max_lazy_height(tree), bound);
    }
  }
}

TEST(ReferenceEval, WorkedExamplePinnedValues) {
  const Polynomial p = example_polynomial();
  const BigIntDomain domain;
  for (const BuiltinScheme which :
       {BuiltinScheme::direct, BuiltinScheme::horner, BuiltinScheme::estrin,
        BuiltinScheme::balanced}) {
    const EvaluationTree tree = build_annotated(p, which);
    const BigInt two[] = {BigInt(2)};
    const BigInt zero[] = {BigInt(0)};
    const BigInt one[] = {BigInt(1)};
    EXPECT_EQ(reference_eval(tree, std::span<const BigInt>(two), domain),
              BigInt(793));
    EXPECT_EQ(reference_eval(tree, std::span<const BigInt>(zero), domain),
              BigInt(1));
    EXPECT_EQ(reference_eval(tree, std::span<const BigInt>(one), domain),
              BigInt(6));
  }
}

TEST(ReferenceEval, MatchesBruteForceOverRandomInstances) {
  std::mt19937_64 rng(55);
  const BigIntDomain domain;
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    const BigInt point[] = {
        BigInt(static_cast<std::int64_t>(rng() % 201) - 100)};
    const std::span<const BigInt> at(point);
    const BigInt expected = testing::brute_force_eval(p, at, domain);
    for (const BuiltinScheme which :
         {BuiltinScheme::direct, BuiltinScheme::horner, BuiltinScheme::estrin,
          BuiltinScheme::balanced}) {
      const EvaluationTree tree = build_annotated(p, which);
      EXPECT_EQ(reference_eval(tree, at, domain), expected);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 2000);
}

TEST(TreeInvariants, NodeCountEqualsTermCount) {
  std::mt19937_64 rng(66);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    for (const BuiltinScheme which :
         {BuiltinScheme::direct, BuiltinScheme::horner, BuiltinScheme::estrin,
          BuiltinScheme::balanced}) {
      const EvaluationTree tree = build_annotated(p, which);
      EXPECT_EQ(tree.nodes.size(), p.terms().size());
      expect_structurally_valid(tree);
    }
  }
}

TEST(TreeInvariants, DegreeSumReconstructsPolynomial) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    for (const BuiltinScheme which :
         {BuiltinScheme::direct, BuiltinScheme::estrin,
          BuiltinScheme::balanced}) {
      const EvaluationTree tree = build_annotated(p, which);
      EXPECT_EQ(tree_to_polynomial(tree), p);
    }
  }
}

TEST(BuildMultivariate, HornerHornerStructure) {
  const Polynomial p = parse_polynomial("x^2*y^2 + 2*x*y + 1", {"x", "y"});
  const std::vector<FunctionScheme> schemes = {
      builtin_scheme(BuiltinScheme::horner),
      builtin_scheme(BuiltinScheme::horner)};
  EvaluationTree tree = build_multivariate(p, schemes);
  compute_lazy_heights(tree);
  ASSERT_EQ(tree.nodes.size(), 3u);

  // Outer chain in x: root coefficient 1 (collapsed constant), the x node
  // carries 2y, the x^2 node carries y^2.
  const TreeNode& root = tree.root();
  EXPECT_FALSE(root.has_sub());
  EXPECT_EQ(root.coeff, BigInt(1));

  const TreeNode& x_node = tree.nodes[1];
  ASSERT_TRUE(x_node.has_sub());
  EXPECT_EQ(render(tree_to_polynomial(*x_node.sub_coeff)), "2*y");

  const TreeNode& x2_node = tree.nodes[0];
  ASSERT_TRUE(x2_node.has_sub());
  EXPECT_EQ(render(tree_to_polynomial(*x2_node.sub_coeff)), "y^2");

  EXPECT_EQ(tree_to_polynomial(tree), p);

  const BigIntDomain domain;
  const BigInt point[] = {BigInt(2), BigInt(3)};
  EXPECT_EQ(reference_eval(tree, std::span<const BigInt>(point), domain),
            BigInt(49));
}

TEST(BuildMultivariate, UnivariateMatchesBuild) {
  std::mt19937_64 rng(68);
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = testing::random_polynomial({}, rng);
    const std::vector<FunctionScheme> schemes = {
        builtin_scheme(BuiltinScheme::balanced)};
    EvaluationTree multi = build_multivariate(p, schemes);
    EvaluationTree uni = build(p, schemes[0], 0);
    compute_lazy_heights(multi);
    compute_lazy_heights(uni);
    EXPECT_EQ(to_dot(multi), to_dot(uni));
  }
}

TEST(BuildMultivariate, ConstantCollapsesToScalar) {
  const Polynomial p = Polynomial::constant(BigInt(5), {"x", "y"});
  const std::vector<FunctionScheme> schemes = {
      builtin_scheme(BuiltinScheme::horner),
      builtin_scheme(BuiltinScheme::horner)};
  const EvaluationTree tree = build_multivariate(p, schemes);
  ASSERT_EQ(tree.nodes.size(), 1u);
  EXPECT_FALSE(tree.root().has_sub());
  EXPECT_EQ(tree.root().coeff, BigInt(5));
  EXPECT_EQ(tree.root().partial_degree, 0u);
}

TEST(BuildMultivariate, RandomBivariateAgainstBruteForce) {
  std::mt19937_64 rng(69);
  const BigIntDomain domain;
  for (int i = 0; i < 50; ++i) {
    std::vector<Term> raw;
    const int terms = 1 + static_cast<int>(rng() % 12);
    for (int t = 0; t < terms; ++t) {
      raw.push_back(Term{
          BigInt(static_cast<std::int64_t>(rng() % 41) - 20),
          {static_cast<std::uint32_t>(rng() % 6),
           static_cast<std::uint32_t>(rng() % 6)}});
    }
    const Polynomial p = Polynomial::canonicalize(std::move(raw), {"x", "y"});
    if (p.is_zero()) continue;
    const std::vector<FunctionScheme> schemes = {
        builtin_scheme(BuiltinScheme::balanced),
        builtin_scheme(BuiltinScheme::estrin)};
    EvaluationTree tree = build_multivariate(p, schemes);
    compute_lazy_heights(tree);
    EXPECT_EQ(tree_to_polynomial(tree), p);
    const BigInt point[] = {BigInt(static_cast<std::int64_t>(rng() % 7) - 3),
                            BigInt(static_cast<std::int64_t>(rng() % 7) - 3)};
    const std::span<const BigInt> at(point);
    EXPECT_EQ(reference_eval(tree, at, domain),
              testing::brute_force_eval(p, at, domain));
  }
}

TEST(ToDot, SingleNode) {
  EvaluationTree tree =
      build(parse_polynomial("7*x^3"), builtin_scheme(BuiltinScheme::direct),
            0);
  compute_lazy_heights(tree);
  EXPECT_EQ(to_dot(tree),
            "digraph evaluation_tree {\n"
            "  n0 [label=\"c=7 d=3 lh=0\"];\n"
            "}\n");
}

TEST(ToDot, HornerIsAPath) {
  EvaluationTree tree = build_annotated(example_polynomial(),
                                        BuiltinScheme::horner);
  const std::string dot = to_dot(tree);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 2)) {
    ++edges;
  }
  EXPECT_EQ(edges, 8u);
  EXPECT_NE(dot.find("n8 -> n7"), std::string::npos);
  EXPECT_NE(dot.find("n1 -> n0"), std::string::npos);
}

TEST(ToDot, DirectIsFlat) {
  EvaluationTree tree = build_annotated(example_polynomial(),
                                        BuiltinScheme::direct);
  const std::string dot = to_dot(tree);
  for (int child = 0; child < 8; ++child) {
    EXPECT_NE(dot.find("n8 -> n" + std::to_string(child)), std::string::npos);
  }
}

TEST(ToDot, DeterministicOutput) {
  const std::string a =
      to_dot(build_annotated(example_polynomial(), BuiltinScheme::balanced));
  const std::string b =
      to_dot(build_annotated(example_polynomial(), BuiltinScheme::balanced));
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace polyeval
