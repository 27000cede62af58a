#include "polyeval/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

namespace polyeval {
namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text,
                   std::optional<std::vector<std::string>> variables)
      : text_(text) {
    if (variables) {
      fixed_variables_ = true;
      variables_ = std::move(*variables);
      for (std::size_t i = 0; i < variables_.size(); ++i) {
        variable_index_[variables_[i]] = i;
      }
    }
  }

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial expression", pos_);
    int sign = read_optional_sign();
    raw_terms_.push_back(read_term(sign));
    skip_space();
    while (!at_end()) {
      const char c = peek();
      int term_sign;
      if (c == '+') {
        term_sign = 1;
      } else if (c == '-') {
        term_sign = -1;
      } else {
        throw ParseError(std::string("expected '+' or '-' before '") + c + "'",
                         pos_);
      }
      ++pos_;
      raw_terms_.push_back(read_term(term_sign));
      skip_space();
    }
    // Widths may disagree when variables were discovered late; pad first.
    for (RawTerm& term : raw_terms_) {
      term.exponents.resize(variables_.size(), 0);
    }
    std::vector<Term> terms;
    terms.reserve(raw_terms_.size());
    for (RawTerm& term : raw_terms_) {
      terms.push_back(Term{std::move(term.coefficient),
                           std::move(term.exponents)});
    }
    return Polynomial::canonicalize(std::move(terms), variables_);
  }

 private:
  struct RawTerm {
    BigInt coefficient;
    std::vector<std::uint32_t> exponents;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  int read_optional_sign() {
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const int sign = peek() == '-' ? -1 : 1;
      ++pos_;
      return sign;
    }
    return 1;
  }

  BigInt read_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return BigInt::from_decimal(text_.substr(start, pos_ - start));
  }

  std::uint32_t read_natural() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ == start) {
      throw ParseError("exponent must be a natural number", pos_);
    }
    std::uint32_t value = 0;
    const auto result = std::from_chars(text_.data() + start,
                                        text_.data() + pos_, value);
    if (result.ec != std::errc()) {
      throw ParseError("exponent out of range", start);
    }
    return value;
  }

  std::size_t variable_slot(const std::string& name, std::size_t at) {
    auto it = variable_index_.find(name);
    if (it != variable_index_.end()) return it->second;
    if (fixed_variables_) {
      throw ParseError("unknown variable '" + name + "'", at);
    }
    variables_.push_back(name);
    variable_index_[name] = variables_.size() - 1;
    return variables_.size() - 1;
  }

  // factor := ident ['^' natural]
  void read_factor(RawTerm& term) {
    skip_space();
    const std::size_t start = pos_;
    if (at_end() || !is_ident_start(peek())) {
      throw ParseError("expected a variable name", pos_);
    }
    ++pos_;
    while (!at_end() && is_ident_char(peek())) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    std::uint32_t exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      exponent = read_natural();
    }
    const std::size_t slot = variable_slot(name, start);
    if (term.exponents.size() <= slot) term.exponents.resize(slot + 1, 0);
    term.exponents[slot] += exponent;
  }

  // term := integer | integer '*' factors | factors
  RawTerm read_term(int sign) {
    skip_space();
    if (at_end()) throw ParseError("expected a term", pos_);
    RawTerm term;
    term.coefficient = BigInt(1);
    if (is_digit(peek())) {
      term.coefficient = read_integer();
    } else if (is_ident_start(peek())) {
      read_factor(term);
    } else {
      throw ParseError(std::string("unexpected character '") + peek() + "'",
                       pos_);
    }
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      read_factor(term);
      skip_space();
    }
    if (sign < 0) term.coefficient = -term.coefficient;
    return term;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool fixed_variables_ = false;
  std::vector<std::string> variables_;
  std::map<std::string, std::size_t> variable_index_;
  std::vector<RawTerm> raw_terms_;
};

double parse_double_literal(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw BindingError("malformed " + std::string(what) + " literal: '" +
                       std::string(text) + "'");
  }
  return value;
}

std::string_view trimmed(std::string_view text) {
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.front())) != 0) {
    text.remove_prefix(1);
  }
  while (!text.empty() &&
         std::isspace(static_cast<unsigned char>(text.back())) != 0) {
    text.remove_suffix(1);
  }
  return text;
}

PointAssignment::Scalar parse_scalar(std::string_view text, DomainTag domain) {
  text = trimmed(text);
  if (text.empty()) throw BindingError("empty point value");
  switch (domain) {
    case DomainTag::integer:
      try {
        return BigInt::from_decimal(text);
      } catch (const std::invalid_argument&) {
        throw BindingError("malformed integer literal: '" + std::string(text) +
                           "'");
      }
    case DomainTag::real:
      return parse_double_literal(text, "number");
    case DomainTag::interval: {
      if (text.front() != '[') {
        const double value = parse_double_literal(text, "number");
        try {
          return Interval(value, value);
        } catch (const std::invalid_argument& e) {
          throw BindingError(e.what());
        }
      }
      if (text.back() != ']') {
        throw BindingError("unterminated interval literal: '" +
                           std::string(text) + "'");
      }
      std::string_view body = text.substr(1, text.size() - 2);
      const std::size_t comma = body.find(',');
      if (comma == std::string_view::npos) {
        throw BindingError("interval literal needs two endpoints: '" +
                           std::string(text) + "'");
      }
      const double lo =
          parse_double_literal(trimmed(body.substr(0, comma)), "interval");
      const double hi =
          parse_double_literal(trimmed(body.substr(comma + 1)), "interval");
      if (lo > hi) {
        throw BindingError("interval endpoints out of order: '" +
                           std::string(text) + "'");
      }
      try {
        return Interval(lo, hi);
      } catch (const std::invalid_argument& e) {
        throw BindingError(e.what());
      }
    }
  }
  throw BindingError("unknown point domain");
}

// Splits on commas that are not inside interval brackets.
std::vector<std::string_view> split_bindings(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  return PolynomialParser(text, std::nullopt).parse();
}

Polynomial parse_polynomial(std::string_view text,
                            std::vector<std::string> variables) {
  return PolynomialParser(text, std::move(variables)).parse();
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& term : p.terms()) {
    const bool negative = term.coefficient.sign() < 0;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? '-' : '+');
    }
    const BigInt magnitude =
        negative ? -term.coefficient : term.coefficient;
    const bool has_factors =
        std::any_of(term.exponents.begin(), term.exponents.end(),
                    [](std::uint32_t e) { return e != 0; });
    const bool print_coefficient =
        !has_factors || !(magnitude == BigInt(1));
    if (print_coefficient) os << magnitude;
    bool need_star = print_coefficient;
    for (std::size_t v = 0; v < term.exponents.size(); ++v) {
      if (term.exponents[v] == 0) continue;
      if (need_star) os << '*';
      os << p.variables()[v];
      if (term.exponents[v] > 1) os << '^' << term.exponents[v];
      need_star = true;
    }
  }
  return os.str();
}

PointAssignment parse_point(std::string_view text,
                            const std::vector<std::string>& variables,
                            DomainTag domain) {
  PointAssignment out;
  out.variables = variables;
  out.values.resize(variables.size());
  std::vector<bool> bound(variables.size(), false);

  if (!trimmed(text).empty()) {
    for (std::string_view binding : split_bindings(text)) {
      binding = trimmed(binding);
      if (binding.empty()) throw BindingError("empty binding");
      const std::size_t eq = binding.find('=');
      if (eq == std::string_view::npos) {
        throw BindingError("binding is missing '=': '" + std::string(binding) +
                           "'");
      }
      const std::string name(trimmed(binding.substr(0, eq)));
      auto it = std::find(variables.begin(), variables.end(), name);
      if (it == variables.end()) {
        throw BindingError("unknown variable '" + name + "' in point");
      }
      const std::size_t slot =
          static_cast<std::size_t>(it - variables.begin());
      if (bound[slot]) {
        throw BindingError("variable '" + name + "' bound twice");
      }
      bound[slot] = true;
      out.values[slot] = parse_scalar(binding.substr(eq + 1), domain);
    }
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!bound[i]) {
      throw BindingError("variable '" + variables[i] + "' is unbound");
    }
  }
  return out;
}

}  // namespace polyeval
