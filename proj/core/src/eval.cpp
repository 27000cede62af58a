#include "polyeval/eval.hpp"

#include <set>

namespace polyeval {
namespace {

void collect_exponents(const EvaluationTree& tree,
                       std::vector<std::set<std::uint32_t>>& per_variable) {
  auto& bucket = per_variable[tree.variable];
  for (const TreeNode& node : tree.nodes) {
    if (node.partial_degree != 0) bucket.insert(node.partial_degree);
    if (node.has_sub()) collect_exponents(*node.sub_coeff, per_variable);
  }
}

CompiledProgram compile_tree(const EvaluationTree& tree,
                             const std::vector<ExponentSet>& exponent_sets) {
  CompiledProgram out;
  out.variable = tree.variable;
  out.records.reserve(tree.nodes.size());
  std::uint32_t max_lazy = 0;
  for (const TreeNode& node : tree.nodes) {
    CompiledProgram::Record record;
    if (node.has_sub()) {
      record.sub = std::make_unique<CompiledProgram>(
          compile_tree(*node.sub_coeff, exponent_sets));
    } else {
      record.coeff = node.coeff;
    }
    if (node.partial_degree != 0) {
      const auto slot =
          exponent_sets[tree.variable].index_of(node.partial_degree);
      record.power_slot = static_cast<std::uint32_t>(*slot);
    }
    record.lazy_slot = node.lazy_height;
    if (node.parent) {
      record.parent_slot = tree.nodes[*node.parent].lazy_height;
    }
    record.reads_register = !node.children.empty();
    max_lazy = std::max(max_lazy, node.lazy_height);
    out.records.push_back(std::move(record));
  }
  out.register_count = max_lazy + 1;
  out.root_child_ends = tree.root().children;
  std::sort(out.root_child_ends.begin(), out.root_child_ends.end());
  return out;
}

}  // namespace

CompiledProgram compile(const EvaluationTree& tree) {
  const std::size_t variable_count =
      std::max(tree.variables.size(), tree.variable + 1);
  std::vector<std::set<std::uint32_t>> gathered(variable_count);
  collect_exponents(tree, gathered);

  std::vector<ExponentSet> exponent_sets;
  exponent_sets.reserve(variable_count);
  for (const auto& bucket : gathered) {
    exponent_sets.push_back(ExponentSet::from_values(
        std::vector<std::uint32_t>(bucket.begin(), bucket.end())));
  }

  CompiledProgram out = compile_tree(tree, exponent_sets);
  out.variable_count = tree.variables.size();
  out.exponent_sets = std::move(exponent_sets);
  return out;
}

}  // namespace polyeval
