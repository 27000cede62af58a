#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyeval {

/// Signed arbitrary-precision integer.
///
/// Magnitude is stored as little-endian 64-bit limbs with no trailing zero
/// limbs; zero is the empty limb vector with sign 0. Multiplication switches
/// from schoolbook to Karatsuba above a fixed limb threshold.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses an optionally signed decimal string. Throws std::invalid_argument
  /// on empty input or non-digit characters.
  static BigInt from_decimal(std::string_view text);

  /// Builds a value from little-endian magnitude words (trailing zeros
  /// allowed).
  static BigInt from_words(std::span<const std::uint64_t> magnitude,
                           bool negative = false);

  /// Exact conversion of an integral finite double. Throws
  /// std::invalid_argument if `value` is not finite or not integral.
  static BigInt from_double_integral(double value);

  static BigInt power_of_two(std::size_t exponent);

  std::string to_decimal() const;

  /// Nearest double, ties to even; overflows to +/-infinity.
  double to_double() const;

  bool is_zero() const noexcept { return sign_ == 0; }
  int sign() const noexcept { return sign_; }

  /// Number of bits in the magnitude; 0 for zero.
  std::size_t bit_length() const noexcept;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator<<=(std::size_t bits);
  BigInt& operator>>=(std::size_t bits);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

  friend bool operator==(const BigInt& lhs, const BigInt& rhs) noexcept {
    return lhs.sign_ == rhs.sign_ && lhs.mag_ == rhs.mag_;
  }
  friend std::strong_ordering operator<=>(const BigInt& lhs,
                                          const BigInt& rhs) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& value);

 private:
  BigInt(int sign, std::vector<std::uint64_t> mag);

  void normalize();

  int sign_ = 0;  // -1, 0, +1
  std::vector<std::uint64_t> mag_;
};

}  // namespace polyeval
