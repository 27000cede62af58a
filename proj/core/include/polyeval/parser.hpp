#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyeval/bigint.hpp"
#include "polyeval/error.hpp"
#include "polyeval/interval.hpp"
#include "polyeval/polynomial.hpp"

namespace polyeval {

/// Grammar accepted for polynomial expressions (expanded form only):
///
///   poly    := [sign] term (sign term)*      sign := '+' | '-'
///   term    := integer | integer '*' factors | factors
///   factors := factor ('*' factor)*
///   factor  := ident ['^' natural]
///   ident   := letter (letter|digit|'_')*
///
/// Whitespace is ignored. The result is canonical. With no explicit variable
/// list, variables are collected in first-appearance order. Throws ParseError
/// with the offending position; a failed parse never yields a partial result.
Polynomial parse_polynomial(std::string_view text);
Polynomial parse_polynomial(std::string_view text,
                            std::vector<std::string> variables);

/// Renders a canonical polynomial in the same grammar, so that
/// parse_polynomial(render(p)) == p.
std::string render(const Polynomial& p);

enum class DomainTag { integer, real, interval };

/// Evaluation-point bindings, one value per variable, in variable order.
struct PointAssignment {
  using Scalar = std::variant<BigInt, double, Interval>;
  std::vector<std::string> variables;
  std::vector<Scalar> values;
};

/// Parses comma-separated "var=value" bindings. Integer domain expects
/// integer literals; real accepts integers and decimals; interval accepts
/// "[lo,hi]" pairs or plain numbers (treated as degenerate intervals).
/// Every variable must be bound exactly once; throws BindingError otherwise
/// (also for malformed literals and inverted intervals).
PointAssignment parse_point(std::string_view text,
                            const std::vector<std::string>& variables,
                            DomainTag domain);

}  // namespace polyeval
