#include "polyeval/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace polyeval {
namespace {

// 0 * x is 0 for every finite x; infinite endpoints only ever stand for
// finite values that overflowed, so the zero rule is sound there too and
// keeps NaN out of the hull.
double endpoint_product(double a, double b) noexcept {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

}  // namespace

Interval::Interval(double lo_in, double hi_in) : lo(lo_in), hi(hi_in) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw std::invalid_argument("invalid interval endpoints");
  }
}

double next_up(double value) noexcept {
  return std::nextafter(value, std::numeric_limits<double>::infinity());
}

double next_down(double value) noexcept {
  return std::nextafter(value, -std::numeric_limits<double>::infinity());
}

Interval interval_add(const Interval& a, const Interval& b) noexcept {
  Interval out;
  out.lo = next_down(a.lo + b.lo);
  out.hi = next_up(a.hi + b.hi);
  return out;
}

Interval interval_mul(const Interval& a, const Interval& b) noexcept {
  const double p1 = endpoint_product(a.lo, b.lo);
  const double p2 = endpoint_product(a.lo, b.hi);
  const double p3 = endpoint_product(a.hi, b.lo);
  const double p4 = endpoint_product(a.hi, b.hi);
  Interval out;
  out.lo = next_down(std::min({p1, p2, p3, p4}));
  out.hi = next_up(std::max({p1, p2, p3, p4}));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Interval& value) {
  return os << '[' << value.lo << ',' << value.hi << ']';
}

}  // namespace polyeval
