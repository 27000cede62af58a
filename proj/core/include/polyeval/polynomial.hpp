#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyeval/bigint.hpp"

namespace polyeval {

/// One monomial: a coefficient and one exponent per variable of the owning
/// polynomial (univariate terms have a single exponent).
struct Term {
  BigInt coefficient;
  std::vector<std::uint32_t> exponents;

  friend bool operator==(const Term& a, const Term& b) = default;
};

/// Returns true if `a` precedes `b` in decreasing lexicographic exponent
/// order, the canonical term order everything downstream relies on.
bool term_order_before(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) noexcept;

/// Sparse multivariate polynomial with integer coefficients.
///
/// Canonical form: terms strictly sorted in decreasing lexicographic order of
/// their exponent vectors, no duplicate exponent vectors, no zero
/// coefficients. The zero polynomial is the empty term list. Instances are
/// immutable once built and safe to share across threads.
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial over no variables

  /// Builds a canonical polynomial from arbitrary raw terms: sorts, merges
  /// like terms, and drops zero coefficients. Throws std::invalid_argument
  /// if any exponent vector length differs from the variable count.
  static Polynomial canonicalize(std::vector<Term> raw_terms,
                                 std::vector<std::string> variables);

  static Polynomial zero(std::vector<std::string> variables);
  static Polynomial constant(BigInt value, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }

  /// True for the zero polynomial or a single term with all exponents zero.
  bool is_constant() const noexcept;

  /// Value of a constant polynomial (zero when is_zero()).
  /// Requires is_constant().
  const BigInt& constant_value() const;

  /// Maximum exponent of the given variable across all terms.
  /// Throws std::domain_error for the zero polynomial.
  std::uint32_t degree(std::size_t variable_index) const;

  /// Unique decomposition p = a * x^e + b in the given variable: `a` collects
  /// the terms with exponent >= e (exponent reduced by e), `b` the rest,
  /// unchanged. Requires a nonzero polynomial and 0 < e <= degree; throws
  /// std::invalid_argument otherwise.
  std::pair<Polynomial, Polynomial> split_at(std::size_t variable_index,
                                             std::uint32_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Term> terms_;
};

}  // namespace polyeval
