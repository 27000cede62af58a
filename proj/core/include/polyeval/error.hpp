#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyeval {

/// Syntax error in a polynomial expression. `position` is the byte offset
/// of the offending character in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Bad evaluation-point binding: unbound variable, duplicate binding,
/// malformed literal, or an inverted interval.
class BindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scheme name that does not map to a builtin or threshold combination.
class UnknownSchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure to read or write an external file (CSV, DOT).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyeval
