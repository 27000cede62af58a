#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyeval/bigint.hpp"
#include "polyeval/polynomial.hpp"
#include "polyeval/ring.hpp"
#include "polyeval/scheme.hpp"

namespace polyeval {

struct EvaluationTree;

/// One node of an evaluation tree.
///
/// The coefficient is a scalar integer, or a nested evaluation tree over the
/// remaining variables when the node's coefficient is itself a non-constant
/// polynomial (multivariate construction). `partial_degree` is the exponent
/// attached to the node; the full degree of the node's monomial is the sum of
/// partial degrees along its path to the root, the node included.
struct TreeNode {
  BigInt coeff;
  std::unique_ptr<EvaluationTree> sub_coeff;  // null for scalar coefficients
  std::uint32_t partial_degree = 0;
  std::vector<std::uint32_t> children;  // node indices, decreasing term order
  std::uint32_t lazy_height = 0;
  std::optional<std::uint32_t> parent;

  bool has_sub() const noexcept { return sub_coeff != nullptr; }
};

/// Evaluation tree for one variable.
///
/// Nodes are stored in decreasing term order, which is also a topological
/// order: every child index is lower than its parent's, node 0 carries the
/// greatest term, and the last node is the root. Trees are immutable once
/// built and annotated, and safe to share across threads.
struct EvaluationTree {
  std::vector<TreeNode> nodes;
  std::size_t variable = 0;             // index into `variables`
  std::vector<std::string> variables;   // full ordered variable list

  std::size_t root_index() const noexcept { return nodes.size() - 1; }
  const TreeNode& root() const { return nodes.back(); }
};

/// Builds the evaluation tree of `p` in the chosen variable under scheme `s`.
///
/// `p` must depend on no other variable (all other exponents zero). A single
/// term yields a single node; the zero polynomial yields the degenerate node
/// (0, 0). Throws std::invalid_argument if the scheme's split leaves the
/// (0, k] range at any degree encountered.
EvaluationTree build(const Polynomial& p, const FunctionScheme& s,
                     std::size_t variable_index);

/// Builds a multivariate tree, applying one scheme per variable recursively:
/// the outer tree decomposes the first variable and each node whose
/// coefficient polynomial is non-constant carries a nested tree over the
/// remaining variables. Constant coefficients collapse to scalars.
EvaluationTree build_multivariate(const Polynomial& p,
                                  std::span<const FunctionScheme> schemes);

/// Annotates every node (nested trees included) with its lazy height: 0 for
/// nodes with at most one child, otherwise one more than the largest
/// register index used by any child subtree but the first. The first child
/// is exempt because its subtree finishes before the parent's accumulation
/// register goes live. On dense scheme trees this is exactly "one more than
/// the maximum lazy height over all children but the first"; on sparse trees
/// a later child can hide a taller single-child spine whose registers must
/// not be reused. The maximum lazy height bounds the register file and stays
/// logarithmic in the node count.
void compute_lazy_heights(EvaluationTree& tree);

std::uint32_t max_lazy_height(const EvaluationTree& tree);
std::uint32_t max_partial_degree(const EvaluationTree& tree);

/// Reconstructs the polynomial a tree evaluates, over the tree's variable
/// suffix. Used for DOT labels and as a structural round-trip check.
Polynomial tree_to_polynomial(const EvaluationTree& tree);

/// DOT digraph with one node per tree node, labeled
/// "c=<coefficient> d=<partial degree> lh=<lazy height>", and parent->child
/// edges in child order. Requires lazy heights to be computed. Output is
/// deterministic for identical trees.
std::string to_dot(const EvaluationTree& tree);

/// Recursive evaluation straight from the defining recurrence: a leaf is
/// c * x^d, an inner node is (c + sum of child values) * x^d. Powers use
/// naive repeated multiplication so this stays an independent oracle for the
/// compiled evaluator. `point` is indexed by absolute variable position.
template <RingDomain D>
typename D::Value reference_eval(const EvaluationTree& tree,
                                 std::span<const typename D::Value> point,
                                 const D& domain);

// --- implementation ---

namespace detail {

template <RingDomain D>
typename D::Value reference_eval_node(const EvaluationTree& tree,
                                      std::size_t index,
                                      std::span<const typename D::Value> point,
                                      const D& domain) {
  const TreeNode& node = tree.nodes[index];
  typename D::Value value =
      node.has_sub() ? reference_eval(*node.sub_coeff, point, domain)
                     : domain.from_integer(node.coeff);
  if (!node.children.empty()) {
    typename D::Value acc = domain.zero();
    for (std::uint32_t child : node.children) {
      acc = domain.add(acc, reference_eval_node(tree, child, point, domain));
    }
    value = domain.add(acc, value);
  }
  const auto& base = point[tree.variable];
  for (std::uint32_t i = 0; i < node.partial_degree; ++i) {
    value = domain.mul(value, base);
  }
  return value;
}

}  // namespace detail

template <RingDomain D>
typename D::Value reference_eval(const EvaluationTree& tree,
                                 std::span<const typename D::Value> point,
                                 const D& domain) {
  return detail::reference_eval_node(tree, tree.root_index(), point, domain);
}

}  // namespace polyeval
