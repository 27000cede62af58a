#include "polyeval/powers.hpp"

#include <algorithm>

namespace polyeval {

ExponentSet ExponentSet::from_values(std::vector<std::uint32_t> values) {
  std::erase(values, 0u);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  ExponentSet out;
  out.exponents = std::move(values);
  return out;
}

std::optional<std::size_t> ExponentSet::index_of(
    std::uint32_t e) const noexcept {
  const auto it = std::lower_bound(exponents.begin(), exponents.end(), e);
  if (it == exponents.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - exponents.begin());
}

ExponentSet required_exponents(const EvaluationTree& tree) {
  std::vector<std::uint32_t> values;
  values.reserve(tree.nodes.size());
  for (const TreeNode& node : tree.nodes) {
    if (node.partial_degree != 0) values.push_back(node.partial_degree);
  }
  return ExponentSet::from_values(std::move(values));
}

}  // namespace polyeval
