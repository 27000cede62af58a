#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "polyeval/ring.hpp"
#include "polyeval/tree.hpp"

namespace polyeval {

/// Sorted, deduplicated set of exponents >= 1. Exponent 0 never appears:
/// the evaluator skips the multiplication entirely when a node's partial
/// degree is zero.
struct ExponentSet {
  std::vector<std::uint32_t> exponents;

  static ExponentSet from_values(std::vector<std::uint32_t> values);

  bool empty() const noexcept { return exponents.empty(); }
  std::size_t size() const noexcept { return exponents.size(); }

  /// Position of `e` in the sorted list, if present.
  std::optional<std::size_t> index_of(std::uint32_t e) const noexcept;
};

/// The distinct nonzero partial degrees over all nodes of this tree, for the
/// tree's own variable only; nested coefficient trees report their own sets.
ExponentSet required_exponents(const EvaluationTree& tree);

/// Precomputed powers of one evaluation point, aligned with the generating
/// exponent set. Read-only once built; shareable across threads.
template <typename Value>
struct PowerTable {
  ExponentSet exponents;
  std::vector<Value> entries;  // entries[i] == base ^ exponents.exponents[i]

  const Value& at(std::uint32_t e) const {
    const auto index = exponents.index_of(e);
    if (!index) throw std::invalid_argument("exponent not in power table");
    return entries[*index];
  }
};

/// Computes base^e for every e in the set by memoized halving: each power is
/// the product of two previously computed ones (base^e = base^(e/2) *
/// base^(e - e/2)), which keeps the multiplication count within
/// 2 * (set size + log2(max exponent)).
template <RingDomain D>
PowerTable<typename D::Value> build_power_table(
    const D& domain, const typename D::Value& base, const ExponentSet& set) {
  PowerTable<typename D::Value> table;
  table.exponents = set;
  if (set.empty()) return table;

  std::map<std::uint32_t, typename D::Value> memo;
  memo.emplace(1, base);
  auto ensure = [&](auto&& self, std::uint32_t e) -> const typename D::Value& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    const std::uint32_t half = e / 2;
    const typename D::Value& lo = self(self, half);
    const typename D::Value& hi = self(self, e - half);
    return memo.emplace(e, domain.mul(lo, hi)).first->second;
  };
  table.entries.reserve(set.size());
  for (std::uint32_t e : set.exponents) {
    table.entries.push_back(ensure(ensure, e));
  }
  return table;
}

}  // namespace polyeval
