#include "polyeval/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>

namespace polyeval {
namespace {

using Limbs = std::vector<std::uint64_t>;
using U128 = unsigned __int128;

constexpr std::size_t kKaratsubaThreshold = 24;

void trim(Limbs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// -1, 0, +1 comparison of magnitudes.
int compare_mag(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Limbs add_mag(const Limbs& a, const Limbs& b) {
  const Limbs& lo = a.size() < b.size() ? a : b;
  const Limbs& hi = a.size() < b.size() ? b : a;
  Limbs out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    U128 cur = static_cast<U128>(hi[i]) + (i < lo.size() ? lo[i] : 0) + carry;
    out[i] = static_cast<std::uint64_t>(cur);
    carry = static_cast<std::uint64_t>(cur >> 64);
  }
  out[hi.size()] = carry;
  trim(out);
  return out;
}

// Requires a >= b.
Limbs sub_mag(const Limbs& a, const Limbs& b) {
  Limbs out(a.size(), 0);
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t bi = i < b.size() ? b[i] : 0;
    std::uint64_t cur = a[i] - bi - borrow;
    borrow = (a[i] < bi + static_cast<U128>(borrow)) ? 1 : 0;
    out[i] = cur;
  }
  trim(out);
  return out;
}

Limbs mul_school(const Limbs& a, const Limbs& b) {
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      U128 cur = static_cast<U128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint64_t>(cur);
      carry = static_cast<std::uint64_t>(cur >> 64);
    }
    out[i + b.size()] = carry;
  }
  trim(out);
  return out;
}

// acc += src << (64 * shift); grows acc as needed.
void add_shifted(Limbs& acc, const Limbs& src, std::size_t shift) {
  if (src.empty()) return;
  if (acc.size() < src.size() + shift + 1) acc.resize(src.size() + shift + 1, 0);
  std::uint64_t carry = 0;
  std::size_t i = 0;
  for (; i < src.size(); ++i) {
    U128 cur = static_cast<U128>(acc[i + shift]) + src[i] + carry;
    acc[i + shift] = static_cast<std::uint64_t>(cur);
    carry = static_cast<std::uint64_t>(cur >> 64);
  }
  for (; carry != 0; ++i) {
    U128 cur = static_cast<U128>(acc[i + shift]) + carry;
    acc[i + shift] = static_cast<std::uint64_t>(cur);
    carry = static_cast<std::uint64_t>(cur >> 64);
  }
}

Limbs mul_mag(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= kKaratsubaThreshold) {
    return mul_school(a, b);
  }
  const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
  Limbs a0(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(h, a.size())));
  Limbs b0(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(std::min(h, b.size())));
  trim(a0);
  trim(b0);
  Limbs a1 = a.size() > h ? Limbs(a.begin() + static_cast<std::ptrdiff_t>(h), a.end()) : Limbs{};
  Limbs b1 = b.size() > h ? Limbs(b.begin() + static_cast<std::ptrdiff_t>(h), b.end()) : Limbs{};

  Limbs z0 = mul_mag(a0, b0);
  Limbs z2 = mul_mag(a1, b1);
  // (a0+a1)(b0+b1) - z0 - z2 is the middle term and is never negative.
  Limbs z1 = sub_mag(mul_mag(add_mag(a0, a1), add_mag(b0, b1)), add_mag(z0, z2));

  Limbs out;
  out.reserve(a.size() + b.size());
  add_shifted(out, z0, 0);
  add_shifted(out, z1, h);
  add_shifted(out, z2, 2 * h);
  trim(out);
  return out;
}

// Divides the magnitude in place by `divisor`, returns the remainder.
std::uint64_t divrem_word(Limbs& v, std::uint64_t divisor) {
  std::uint64_t rem = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    U128 cur = (static_cast<U128>(rem) << 64) | v[i];
    v[i] = static_cast<std::uint64_t>(cur / divisor);
    rem = static_cast<std::uint64_t>(cur % divisor);
  }
  trim(v);
  return rem;
}

void mul_word_add(Limbs& v, std::uint64_t factor, std::uint64_t addend) {
  std::uint64_t carry = addend;
  for (auto& limb : v) {
    U128 cur = static_cast<U128>(limb) * factor + carry;
    limb = static_cast<std::uint64_t>(cur);
    carry = static_cast<std::uint64_t>(cur >> 64);
  }
  if (carry != 0) v.push_back(carry);
}

bool bit_at(const Limbs& v, std::size_t index) {
  return (v[index / 64] >> (index % 64)) & 1u;
}

bool any_bit_below(const Limbs& v, std::size_t index) {
  const std::size_t word = index / 64;
  for (std::size_t i = 0; i < word && i < v.size(); ++i) {
    if (v[i] != 0) return true;
  }
  if (word < v.size() && index % 64 != 0) {
    std::uint64_t mask = (std::uint64_t{1} << (index % 64)) - 1;
    if ((v[word] & mask) != 0) return true;
  }
  return false;
}

constexpr std::uint64_t kDecChunk = 10'000'000'000'000'000'000ull;  // 10^19
constexpr int kDecChunkDigits = 19;

}  // namespace

BigInt::BigInt(std::int64_t value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  std::uint64_t mag = static_cast<std::uint64_t>(value);
  if (value < 0) mag = ~mag + 1;  // two's-complement negate handles INT64_MIN
  mag_.push_back(mag);
}

BigInt::BigInt(int sign, std::vector<std::uint64_t> mag)
    : sign_(sign), mag_(std::move(mag)) {
  normalize();
}

void BigInt::normalize() {
  trim(mag_);
  if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::from_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("empty decimal literal");
  BigInt out;
  std::uint64_t chunk = 0;
  int chunk_digits = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid character in decimal literal");
    }
    chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
    if (++chunk_digits == kDecChunkDigits) {
      mul_word_add(out.mag_, kDecChunk, chunk);
      chunk = 0;
      chunk_digits = 0;
    }
  }
  if (chunk_digits > 0) {
    std::uint64_t scale = 1;
    for (int i = 0; i < chunk_digits; ++i) scale *= 10;
    mul_word_add(out.mag_, scale, chunk);
  }
  trim(out.mag_);
  out.sign_ = out.mag_.empty() ? 0 : (negative ? -1 : 1);
  return out;
}

BigInt BigInt::from_words(std::span<const std::uint64_t> magnitude,
                          bool negative) {
  BigInt out;
  out.mag_.assign(magnitude.begin(), magnitude.end());
  trim(out.mag_);
  out.sign_ = out.mag_.empty() ? 0 : (negative ? -1 : 1);
  return out;
}

BigInt BigInt::from_double_integral(double value) {
  if (!std::isfinite(value) || value != std::trunc(value)) {
    throw std::invalid_argument("value is not an integral finite double");
  }
  if (value == 0.0) return BigInt();
  int exp = 0;
  double frac = std::frexp(std::fabs(value), &exp);  // frac in [0.5, 1)
  auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
  BigInt out = from_words(std::span<const std::uint64_t>(&mantissa, 1),
                          value < 0.0);
  if (exp >= 53) {
    out <<= static_cast<std::size_t>(exp - 53);
  } else {
    out >>= static_cast<std::size_t>(53 - exp);
  }
  return out;
}

BigInt BigInt::power_of_two(std::size_t exponent) {
  BigInt out(1);
  out <<= exponent;
  return out;
}

std::string BigInt::to_decimal() const {
  if (is_zero()) return "0";
  Limbs work = mag_;
  std::vector<std::uint64_t> chunks;
  while (!work.empty()) {
    chunks.push_back(divrem_word(work, kDecChunk));
  }
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(static_cast<std::size_t>(kDecChunkDigits) - part.size(), '0');
    out += part;
  }
  return out;
}

double BigInt::to_double() const {
  if (is_zero()) return 0.0;
  const std::size_t length = bit_length();
  double out;
  if (length <= 53) {
    out = static_cast<double>(mag_[0]);
  } else {
    const std::size_t drop = length - 53;
    std::uint64_t mantissa = 0;
    for (std::size_t i = 0; i < 53; ++i) {
      if (bit_at(mag_, drop + i)) mantissa |= std::uint64_t{1} << i;
    }
    const bool round = bit_at(mag_, drop - 1);
    const bool sticky = drop >= 2 && any_bit_below(mag_, drop - 1);
    if (round && (sticky || (mantissa & 1))) ++mantissa;
    const int shift = drop > static_cast<std::size_t>(1 << 20)
                          ? (1 << 20)  // saturates; ldexp overflows to inf
                          : static_cast<int>(drop);
    out = std::ldexp(static_cast<double>(mantissa), shift);
  }
  return sign_ < 0 ? -out : out;
}

std::size_t BigInt::bit_length() const noexcept {
  if (mag_.empty()) return 0;
  return 64 * (mag_.size() - 1) +
         static_cast<std::size_t>(std::bit_width(mag_.back()));
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    mag_ = add_mag(mag_, rhs.mag_);
    return *this;
  }
  switch (compare_mag(mag_, rhs.mag_)) {
    case 0:
      sign_ = 0;
      mag_.clear();
      break;
    case 1:
      mag_ = sub_mag(mag_, rhs.mag_);
      break;
    default:
      mag_ = sub_mag(rhs.mag_, mag_);
      sign_ = rhs.sign_;
      break;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  // Cheap negate-and-add; avoids duplicating the sign logic.
  BigInt negated = -rhs;
  return *this += negated;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  *this = *this * rhs;
  return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt out;
  if (lhs.sign_ == 0 || rhs.sign_ == 0) return out;
  out.mag_ = mul_mag(lhs.mag_, rhs.mag_);
  out.sign_ = lhs.sign_ == rhs.sign_ ? 1 : -1;
  return out;
}

BigInt& BigInt::operator<<=(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  const std::size_t words = bits / 64;
  const std::size_t rem = bits % 64;
  Limbs out(mag_.size() + words + 1, 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    out[i + words] |= rem == 0 ? mag_[i] : (mag_[i] << rem);
    if (rem != 0) out[i + words + 1] |= mag_[i] >> (64 - rem);
  }
  trim(out);
  mag_ = std::move(out);
  return *this;
}

BigInt& BigInt::operator>>=(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  const std::size_t words = bits / 64;
  const std::size_t rem = bits % 64;
  if (words >= mag_.size()) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  Limbs out(mag_.size() - words, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = rem == 0 ? mag_[i + words] : (mag_[i + words] >> rem);
    if (rem != 0 && i + words + 1 < mag_.size()) {
      out[i] |= mag_[i + words + 1] << (64 - rem);
    }
  }
  trim(out);
  mag_ = std::move(out);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const BigInt& lhs,
                                 const BigInt& rhs) noexcept {
  if (lhs.sign_ != rhs.sign_) {
    return lhs.sign_ <=> rhs.sign_;
  }
  int mag_order = compare_mag(lhs.mag_, rhs.mag_);
  if (lhs.sign_ < 0) mag_order = -mag_order;
  return mag_order <=> 0;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
  return os << value.to_decimal();
}

}  // namespace polyeval
