#include <cmath>
#include <stdexcept>

#include "polyeval/ring.hpp"

namespace polyeval {
namespace {

void require_same_variables(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) {
    throw std::invalid_argument("polynomial operands over different variables");
  }
}

}  // namespace

Interval IntervalDomain::from_integer(const BigInt& c) const {
  const double nearest = c.to_double();
  if (std::isfinite(nearest) && BigInt::from_double_integral(nearest) == c) {
    return Interval(nearest, nearest);
  }
  Interval out;
  out.lo = next_down(nearest);
  out.hi = next_up(nearest);
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  require_same_variables(a, b);
  std::vector<Term> raw = a.terms();
  raw.insert(raw.end(), b.terms().begin(), b.terms().end());
  return Polynomial::canonicalize(std::move(raw), a.variables());
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_variables(a, b);
  std::vector<Term> raw;
  raw.reserve(a.terms().size() * b.terms().size());
  for (const Term& ta : a.terms()) {
    for (const Term& tb : b.terms()) {
      Term product;
      product.coefficient = ta.coefficient * tb.coefficient;
      product.exponents.resize(ta.exponents.size());
      for (std::size_t i = 0; i < ta.exponents.size(); ++i) {
        product.exponents[i] = ta.exponents[i] + tb.exponents[i];
      }
      raw.push_back(std::move(product));
    }
  }
  return Polynomial::canonicalize(std::move(raw), a.variables());
}

}  // namespace polyeval
