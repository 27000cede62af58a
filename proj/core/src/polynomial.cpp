#include "polyeval/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyeval {

bool term_order_before(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) noexcept {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::canonicalize(std::vector<Term> raw_terms,
                                    std::vector<std::string> variables) {
  for (const Term& term : raw_terms) {
    if (term.exponents.size() != variables.size()) {
      throw std::invalid_argument(
          "term exponent count does not match variable count");
    }
  }
  std::sort(raw_terms.begin(), raw_terms.end(),
            [](const Term& a, const Term& b) {
              return term_order_before(a.exponents, b.exponents);
            });
  Polynomial out;
  out.variables_ = std::move(variables);
  for (Term& term : raw_terms) {
    if (!out.terms_.empty() && out.terms_.back().exponents == term.exponents) {
      out.terms_.back().coefficient += term.coefficient;
      if (out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
    } else if (!term.coefficient.is_zero()) {
      out.terms_.push_back(std::move(term));
    }
  }
  return out;
}

Polynomial Polynomial::zero(std::vector<std::string> variables) {
  Polynomial out;
  out.variables_ = std::move(variables);
  return out;
}

Polynomial Polynomial::constant(BigInt value,
                                std::vector<std::string> variables) {
  Polynomial out;
  out.variables_ = std::move(variables);
  if (!value.is_zero()) {
    out.terms_.push_back(Term{
        std::move(value),
        std::vector<std::uint32_t>(out.variables_.size(), 0)});
  }
  return out;
}

bool Polynomial::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  return std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                     [](std::uint32_t e) { return e == 0; });
}

const BigInt& Polynomial::constant_value() const {
  static const BigInt kZero;
  if (terms_.empty()) return kZero;
  if (!is_constant()) {
    throw std::logic_error("constant_value() on a non-constant polynomial");
  }
  return terms_[0].coefficient;
}

std::uint32_t Polynomial::degree(std::size_t variable_index) const {
  if (is_zero()) {
    throw std::domain_error("degree of the zero polynomial is undefined");
  }
  if (variable_index >= variables_.size()) {
    throw std::invalid_argument("variable index out of range");
  }
  std::uint32_t out = 0;
  for (const Term& term : terms_) {
    out = std::max(out, term.exponents[variable_index]);
  }
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::split_at(
    std::size_t variable_index, std::uint32_t e) const {
  if (is_zero()) {
    throw std::invalid_argument("cannot split the zero polynomial");
  }
  if (e == 0 || e > degree(variable_index)) {
    throw std::invalid_argument("split exponent out of range");
  }
  Polynomial a;
  Polynomial b;
  a.variables_ = variables_;
  b.variables_ = variables_;
  for (const Term& term : terms_) {
    if (term.exponents[variable_index] >= e) {
      Term reduced = term;
      reduced.exponents[variable_index] -= e;
      a.terms_.push_back(std::move(reduced));
    } else {
      b.terms_.push_back(term);
    }
  }
  // Reducing the same exponent slot by the same constant preserves the
  // lexicographic order, so both halves stay canonical without a re-sort.
  return {std::move(a), std::move(b)};
}

}  // namespace polyeval
