#pragma once

#include <iosfwd>

namespace polyeval {

/// Closed floating-point interval [lo, hi] with outward-rounded arithmetic.
///
/// Endpoints are never NaN and always satisfy lo <= hi. Rounding is done by
/// stepping one representable value outward from the natively rounded result
/// instead of switching the hardware rounding mode, so operations stay pure
/// and thread-safe at the cost of slightly wider intervals.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo, double hi);

  bool contains(double value) const noexcept {
    return lo <= value && value <= hi;
  }

  friend bool operator==(const Interval& a, const Interval& b) noexcept {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Next representable double toward +infinity (identity on +infinity).
double next_up(double value) noexcept;
/// Next representable double toward -infinity (identity on -infinity).
double next_down(double value) noexcept;

Interval interval_add(const Interval& a, const Interval& b) noexcept;
Interval interval_mul(const Interval& a, const Interval& b) noexcept;

std::ostream& operator<<(std::ostream& os, const Interval& value);

}  // namespace polyeval
