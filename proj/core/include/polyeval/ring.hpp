#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "polyeval/bigint.hpp"
#include "polyeval/interval.hpp"
#include "polyeval/polynomial.hpp"

namespace polyeval {

/// Capability set the evaluator is generic over: a value type with zero,
/// addition, multiplication and injection of integer coefficients.
///
/// `exact` distinguishes domains where ring identities hold bit-for-bit
/// (integers, polynomials) from approximate ones (floats, intervals).
template <typename D>
concept RingDomain = requires(const D& domain, const typename D::Value& a,
                              const typename D::Value& b, const BigInt& c) {
  typename D::Value;
  { domain.zero() } -> std::same_as<typename D::Value>;
  { domain.add(a, b) } -> std::same_as<typename D::Value>;
  { domain.mul(a, b) } -> std::same_as<typename D::Value>;
  { domain.from_integer(c) } -> std::same_as<typename D::Value>;
  { D::exact } -> std::convertible_to<bool>;
  requires std::equality_comparable<typename D::Value>;
};

struct BigIntDomain {
  using Value = BigInt;
  static constexpr bool exact = true;

  Value zero() const { return BigInt(); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value from_integer(const BigInt& c) const { return c; }
};

struct DoubleDomain {
  using Value = double;
  static constexpr bool exact = false;

  Value zero() const { return 0.0; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value from_integer(const BigInt& c) const { return c.to_double(); }
};

struct IntervalDomain {
  using Value = Interval;
  static constexpr bool exact = false;

  Value zero() const { return Interval(); }
  Value add(const Value& a, const Value& b) const {
    return interval_add(a, b);
  }
  Value mul(const Value& a, const Value& b) const {
    return interval_mul(a, b);
  }
  /// Injects a coefficient as the nearest double; when the conversion is not
  /// exact the interval is widened one step outward on each side so it always
  /// contains the true integer.
  Value from_integer(const BigInt& c) const;
};

/// Exact polynomial sum in canonical form. Operands must share the same
/// variable list.
Polynomial poly_add(const Polynomial& a, const Polynomial& b);

/// Exact polynomial product in canonical form. Operands must share the same
/// variable list.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Evaluating a program over this domain composes polynomials: the point is
/// itself a polynomial and the result is p at that polynomial.
class PolynomialDomain {
 public:
  explicit PolynomialDomain(std::vector<std::string> variables)
      : variables_(std::move(variables)) {}

  using Value = Polynomial;
  static constexpr bool exact = true;

  Value zero() const { return Polynomial::zero(variables_); }
  Value add(const Value& a, const Value& b) const { return poly_add(a, b); }
  Value mul(const Value& a, const Value& b) const { return poly_mul(a, b); }
  Value from_integer(const BigInt& c) const {
    return Polynomial::constant(c, variables_);
  }

 private:
  std::vector<std::string> variables_;
};

}  // namespace polyeval
