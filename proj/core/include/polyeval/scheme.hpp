#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace polyeval {

/// A function scheme: a split function f with 0 < f(k) <= k for every k >= 1,
/// selecting the exponent at which a degree-k polynomial is decomposed into
/// p = a * x^f(k) + b during tree construction.
///
/// Schemes are immutable values; the split function must be pure.
class FunctionScheme {
 public:
  using SplitFn = std::function<std::uint64_t(std::uint64_t)>;

  FunctionScheme(std::string name, SplitFn split)
      : name_(std::move(name)), split_(std::move(split)) {}

  std::uint64_t split(std::uint64_t k) const { return split_(k); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  SplitFn split_;
};

enum class BuiltinScheme { direct, horner, estrin, balanced };

/// The four builtin schemes:
///   direct    D(k) = k
///   horner    H(k) = 1
///   estrin    E(k) = 2^floor(log2 k)
///   balanced  B(k) = ceil(k / 2)
///
/// Balanced splits at the exact half. Rounding the half up (rather than
/// down) keeps the split positive at k = 1 and keeps the exponents required
/// for a dense degree-n polynomial inside {floor(n/2^k), floor(n/2^k) + 1}.
FunctionScheme builtin_scheme(BuiltinScheme which);

/// Scheme that uses `upper` above the cutoff and `lower` at or below it:
/// split(k) = upper(k) for k > cutoff, lower(k) otherwise. Requires
/// cutoff >= 1.
FunctionScheme threshold_combine(FunctionScheme upper, FunctionScheme lower,
                                 std::uint64_t cutoff);

struct SchemeViolation {
  std::uint64_t k = 0;
  std::uint64_t value = 0;
};

/// Checks 0 < split(k) <= k for all 1 <= k <= k_max; reports the first
/// violating k, or nothing if the scheme is valid over the range.
std::optional<SchemeViolation> validate(const FunctionScheme& scheme,
                                        std::uint64_t k_max);

}  // namespace polyeval
