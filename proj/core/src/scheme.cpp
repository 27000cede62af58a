#include "polyeval/scheme.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace polyeval {

FunctionScheme builtin_scheme(BuiltinScheme which) {
  switch (which) {
    case BuiltinScheme::direct:
      return {"direct", [](std::uint64_t k) { return k; }};
    case BuiltinScheme::horner:
      return {"horner", [](std::uint64_t) { return std::uint64_t{1}; }};
    case BuiltinScheme::estrin:
      return {"estrin", [](std::uint64_t k) { return std::bit_floor(k); }};
    case BuiltinScheme::balanced:
      return {"balanced", [](std::uint64_t k) { return (k + 1) / 2; }};
  }
  throw std::invalid_argument("unknown builtin scheme");
}

FunctionScheme threshold_combine(FunctionScheme upper, FunctionScheme lower,
                                 std::uint64_t cutoff) {
  if (cutoff < 1) throw std::invalid_argument("threshold cutoff must be >= 1");
  std::string name = upper.name() + ":" + lower.name() + "@" +
                     std::to_string(cutoff);
  auto split = [upper = std::move(upper), lower = std::move(lower),
                cutoff](std::uint64_t k) {
    return k > cutoff ? upper.split(k) : lower.split(k);
  };
  return {std::move(name), std::move(split)};
}

std::optional<SchemeViolation> validate(const FunctionScheme& scheme,
                                        std::uint64_t k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const std::uint64_t value = scheme.split(k);
    if (value == 0 || value > k) return SchemeViolation{k, value};
  }
  return std::nullopt;
}

}  // namespace polyeval
