#include "polyeval/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "polyeval/parser.hpp"

namespace polyeval {
namespace {

// Term payload during construction: exponent in the variable being built,
// plus either a scalar coefficient or a nested tree.
struct ProtoTerm {
  std::uint32_t exponent = 0;
  BigInt scalar;
  std::unique_ptr<EvaluationTree> sub;
};

struct Builder {
  const FunctionScheme& scheme;
  std::vector<ProtoTerm>& terms;   // decreasing exponent order
  std::vector<TreeNode>& nodes;    // node slot i corresponds to terms[i]

  // Builds the subtree for terms[first, last) whose exponents are taken
  // relative to `shift`, and returns the root's node index. Nodes land in
  // their term's slot, so the array order is the decreasing term order.
  std::uint32_t build_range(std::size_t first, std::size_t last,
                            std::uint32_t shift) {
    if (last - first == 1) {
      TreeNode& node = nodes[first];
      node.coeff = std::move(terms[first].scalar);
      node.sub_coeff = std::move(terms[first].sub);
      node.partial_degree = terms[first].exponent - shift;
      return static_cast<std::uint32_t>(first);
    }
    const std::uint32_t degree = terms[first].exponent - shift;
    const std::uint64_t split = scheme.split(degree);
    if (split == 0 || split > degree) {
      throw std::invalid_argument("scheme split left the range (0, k] at k=" +
                                  std::to_string(degree));
    }
    const std::uint32_t e = static_cast<std::uint32_t>(split);
    // First index with exponent below shift + e; the leading term always
    // stays in the upper half, so mid > first.
    const std::uint32_t threshold = shift + e;
    auto it = std::lower_bound(
        terms.begin() + static_cast<std::ptrdiff_t>(first),
        terms.begin() + static_cast<std::ptrdiff_t>(last), threshold,
        [](const ProtoTerm& t, std::uint32_t bound) {
          return t.exponent >= bound;
        });
    const std::size_t mid =
        static_cast<std::size_t>(it - terms.begin());
    if (mid == last) {
      // Zero remainder: no node is spent on it, the upper tree just absorbs
      // the exponent.
      const std::uint32_t top = build_range(first, last, shift + e);
      nodes[top].partial_degree += e;
      return top;
    }
    const std::uint32_t upper = build_range(first, mid, shift + e);
    const std::uint32_t lower = build_range(mid, last, shift);
    // Children of a node are multiplied by the node's own power, so the
    // attachment increment is relative to the lower root's partial degree
    // (which is nonzero when a sparse remainder ends in a bare power).
    nodes[upper].partial_degree += e - nodes[lower].partial_degree;
    // The new child covers higher terms than everything already attached;
    // children are recorded in build order and reversed once at the end.
    nodes[lower].children.push_back(upper);
    return lower;
  }
};

EvaluationTree build_from_proto(std::vector<ProtoTerm> terms,
                                const FunctionScheme& scheme,
                                std::size_t variable_index,
                                std::vector<std::string> variables) {
  EvaluationTree tree;
  tree.variable = variable_index;
  tree.variables = std::move(variables);
  tree.nodes.resize(terms.size());
  Builder builder{scheme, terms, tree.nodes};
  builder.build_range(0, terms.size(), 0);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    auto& children = tree.nodes[i].children;
    std::reverse(children.begin(), children.end());
    for (std::uint32_t child : children) {
      tree.nodes[child].parent = static_cast<std::uint32_t>(i);
    }
  }
  return tree;
}

EvaluationTree degenerate_zero_tree(std::size_t variable_index,
                                    std::vector<std::string> variables) {
  EvaluationTree tree;
  tree.variable = variable_index;
  tree.variables = std::move(variables);
  tree.nodes.resize(1);
  return tree;
}

EvaluationTree build_multivariate_at(const Polynomial& p, std::size_t depth,
                                     std::span<const FunctionScheme> schemes);

// Groups `p` by the exponent of variable `depth`; each group's coefficient
// polynomial keeps the full variable list with that slot zeroed.
std::vector<ProtoTerm> group_terms(const Polynomial& p, std::size_t depth,
                                   std::span<const FunctionScheme> schemes) {
  std::map<std::uint32_t, std::vector<Term>, std::greater<>> groups;
  for (const Term& term : p.terms()) {
    Term inner = term;
    inner.exponents[depth] = 0;
    groups[term.exponents[depth]].push_back(std::move(inner));
  }
  std::vector<ProtoTerm> out;
  out.reserve(groups.size());
  for (auto& [exponent, raw] : groups) {
    Polynomial coeff = Polynomial::canonicalize(std::move(raw), p.variables());
    ProtoTerm proto;
    proto.exponent = exponent;
    if (coeff.is_constant()) {
      proto.scalar = coeff.constant_value();
    } else {
      proto.sub = std::make_unique<EvaluationTree>(
          build_multivariate_at(coeff, depth + 1, schemes));
    }
    out.push_back(std::move(proto));
  }
  return out;
}

EvaluationTree build_multivariate_at(const Polynomial& p, std::size_t depth,
                                     std::span<const FunctionScheme> schemes) {
  if (p.is_zero()) return degenerate_zero_tree(depth, p.variables());
  if (depth >= p.variables().size()) {
    // Only reachable for constant polynomials over an exhausted variable
    // list; they are collapsed to scalars by the caller.
    throw std::logic_error("variable depth exhausted during construction");
  }
  std::vector<ProtoTerm> terms = group_terms(p, depth, schemes);
  return build_from_proto(std::move(terms), schemes[depth], depth,
                          p.variables());
}

void append_dot_label(std::ostream& os, const TreeNode& node) {
  if (node.has_sub()) {
    os << render(tree_to_polynomial(*node.sub_coeff));
  } else {
    os << node.coeff;
  }
}

}  // namespace

EvaluationTree build(const Polynomial& p, const FunctionScheme& s,
                     std::size_t variable_index) {
  if (p.is_zero()) return degenerate_zero_tree(variable_index, p.variables());
  if (!p.variables().empty() && variable_index >= p.variables().size()) {
    throw std::invalid_argument("variable index out of range");
  }
  std::vector<ProtoTerm> terms;
  terms.reserve(p.terms().size());
  for (const Term& term : p.terms()) {
    for (std::size_t v = 0; v < term.exponents.size(); ++v) {
      if (v != variable_index && term.exponents[v] != 0) {
        throw std::invalid_argument(
            "polynomial is not univariate in the chosen variable");
      }
    }
    ProtoTerm proto;
    proto.exponent =
        term.exponents.empty() ? 0 : term.exponents[variable_index];
    proto.scalar = term.coefficient;
    terms.push_back(std::move(proto));
  }
  return build_from_proto(std::move(terms), s, variable_index, p.variables());
}

EvaluationTree build_multivariate(const Polynomial& p,
                                  std::span<const FunctionScheme> schemes) {
  if (schemes.size() != p.variables().size()) {
    throw std::invalid_argument("need exactly one scheme per variable");
  }
  if (p.is_zero()) return degenerate_zero_tree(0, p.variables());
  if (p.is_constant() || p.variables().empty()) {
    // Degenerate single scalar node.
    std::vector<ProtoTerm> terms(1);
    terms[0].scalar = p.constant_value();
    static const FunctionScheme kTrivial{"direct",
                                         [](std::uint64_t k) { return k; }};
    return build_from_proto(std::move(terms),
                            schemes.empty() ? kTrivial : schemes[0], 0,
                            p.variables());
  }
  return build_multivariate_at(p, 0, schemes);
}

void compute_lazy_heights(EvaluationTree& tree) {
  // usage[i]: highest register index touched while the flat walk covers the
  // subtree of node i. The first child of a node is exempt from the parent's
  // height (its subtree completes before the parent's register goes live),
  // but later children contribute their whole subtree usage: a single-child
  // node can hide a taller spine below it, and its registers stay busy while
  // the parent accumulates.
  std::vector<std::uint32_t> usage(tree.nodes.size(), 0);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    TreeNode& node = tree.nodes[i];
    if (node.has_sub()) compute_lazy_heights(*node.sub_coeff);
    if (node.children.size() <= 1) {
      node.lazy_height = 0;
    } else {
      std::uint32_t height = 0;
      for (std::size_t c = 1; c < node.children.size(); ++c) {
        height = std::max(height, usage[node.children[c]]);
      }
      node.lazy_height = height + 1;
    }
    usage[i] = node.lazy_height;
    if (!node.children.empty()) {
      usage[i] = std::max(usage[i], usage[node.children[0]]);
    }
  }
}

std::uint32_t max_lazy_height(const EvaluationTree& tree) {
  std::uint32_t out = 0;
  for (const TreeNode& node : tree.nodes) {
    out = std::max(out, node.lazy_height);
    if (node.has_sub()) out = std::max(out, max_lazy_height(*node.sub_coeff));
  }
  return out;
}

std::uint32_t max_partial_degree(const EvaluationTree& tree) {
  std::uint32_t out = 0;
  for (const TreeNode& node : tree.nodes) {
    out = std::max(out, node.partial_degree);
    if (node.has_sub()) {
      out = std::max(out, max_partial_degree(*node.sub_coeff));
    }
  }
  return out;
}

Polynomial tree_to_polynomial(const EvaluationTree& tree) {
  const std::size_t count = tree.nodes.size();
  // Full degree of each node = partial degree summed along the root path;
  // parents follow children, so a reverse sweep resolves every node.
  std::vector<std::uint32_t> full_degree(count, 0);
  for (std::size_t i = count; i-- > 0;) {
    const TreeNode& node = tree.nodes[i];
    full_degree[i] = node.partial_degree +
                     (node.parent ? full_degree[*node.parent] : 0);
  }
  std::vector<std::string> variables(
      tree.variables.begin() +
          static_cast<std::ptrdiff_t>(tree.variable),
      tree.variables.end());
  std::vector<Term> raw;
  raw.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const TreeNode& node = tree.nodes[i];
    if (node.has_sub()) {
      const Polynomial sub_poly = tree_to_polynomial(*node.sub_coeff);
      for (const Term& inner : sub_poly.terms()) {
        Term term;
        term.coefficient = inner.coefficient;
        term.exponents.assign(variables.size(), 0);
        term.exponents[0] = full_degree[i];
        // Inner exponents are over a strictly deeper suffix.
        std::copy(inner.exponents.begin(), inner.exponents.end(),
                  term.exponents.end() -
                      static_cast<std::ptrdiff_t>(inner.exponents.size()));
        raw.push_back(std::move(term));
      }
    } else {
      Term term;
      term.coefficient = node.coeff;
      term.exponents.assign(variables.size(), 0);
      if (!variables.empty()) term.exponents[0] = full_degree[i];
      raw.push_back(std::move(term));
    }
  }
  return Polynomial::canonicalize(std::move(raw), std::move(variables));
}

std::string to_dot(const EvaluationTree& tree) {
  std::ostringstream os;
  os << "digraph evaluation_tree {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    os << "  n" << i << " [label=\"c=";
    append_dot_label(os, node);
    os << " d=" << node.partial_degree << " lh=" << node.lazy_height
       << "\"];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    for (std::uint32_t child : tree.nodes[i].children) {
      os << "  n" << i << " -> n" << child << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace polyeval
