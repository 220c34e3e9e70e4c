// Copyright 2026 The ivinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IVINV_INTERVAL_HPP
#define IVINV_INTERVAL_HPP

#include <cmath>
#include <ostream>
#include <sstream>

#include "ivinv/error.hpp"
#include "ivinv/tolerance.hpp"

namespace ivinv {

// Closed real interval [lo, hi]. Only the positive-orthant operators used by
// the inventory model are provided: subtraction and division are partial and
// throw instead of widening the result.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  explicit constexpr Interval(double value) : lo(value), hi(value) {}
  Interval(double lower, double upper) : lo(lower), hi(upper) {
    if (!(lower <= upper)) {
      std::ostringstream os;
      os << "interval bounds out of order: [" << lower << ", " << upper << "]";
      throw error(errc::invalid_argument, os.str());
    }
  }

  constexpr bool degenerate() const noexcept { return lo == hi; }
  constexpr bool is_zero() const noexcept { return lo == 0.0 && hi == 0.0; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << x.lo << ", " << x.hi << ']';
}

namespace detail {

// Bypasses the order check for results that are valid by construction.
inline Interval make_unchecked(double lo, double hi) noexcept {
  Interval x;
  x.lo = lo;
  x.hi = hi;
  return x;
}

}  // namespace detail

inline Interval add(const Interval& x, const Interval& y) noexcept {
  return detail::make_unchecked(x.lo + y.lo, x.hi + y.hi);
}

inline Interval operator+(const Interval& x, const Interval& y) noexcept {
  return add(x, y);
}

inline Interval& operator+=(Interval& x, const Interval& y) noexcept {
  x = add(x, y);
  return x;
}

inline Interval scale(double beta, const Interval& x) {
  if (beta < 0.0) {
    std::ostringstream os;
    os << "scale factor " << beta << " is negative";
    throw error(errc::negative_scalar, os.str());
  }
  return detail::make_unchecked(beta * x.lo, beta * x.hi);
}

inline double length(const Interval& x) noexcept { return x.hi - x.lo; }

// Defined only when |x| >= |y|.
inline Interval sub_checked(const Interval& x, const Interval& y) {
  if (length(x) + kGuardSlack < length(y)) {
    std::ostringstream os;
    os << x << " - " << y << ": width " << length(x) << " < " << length(y);
    throw error(errc::width_violation, os.str());
  }
  double lo = x.lo - y.lo;
  double hi = x.hi - y.hi;
  if (hi < lo) hi = lo;  // rounding inside the guard slack
  return detail::make_unchecked(lo, hi);
}

inline Interval mul_nonneg(const Interval& x, const Interval& y) {
  if (x.lo < 0.0 || y.lo < 0.0) {
    std::ostringstream os;
    os << x << " * " << y << ": negative lower bound";
    throw error(errc::negative_operand, os.str());
  }
  return detail::make_unchecked(x.lo * y.lo, x.hi * y.hi);
}

inline Interval sqrt_nonneg(const Interval& x) {
  if (x.lo < 0.0) {
    std::ostringstream os;
    os << "sqrt" << x << ": negative lower bound";
    throw error(errc::negative_operand, os.str());
  }
  return detail::make_unchecked(std::sqrt(x.lo), std::sqrt(x.hi));
}

// Boundwise quotient [x.lo / y.lo, x.hi / y.hi], defined only if
// x.lo * y.hi <= x.hi * y.lo.
inline Interval div_checked(const Interval& x, const Interval& y) {
  if (y.lo == 0.0 || y.hi == 0.0) {
    std::ostringstream os;
    os << x << " / " << y << ": zero bound in denominator";
    throw error(errc::zero_denominator, os.str());
  }
  if (x.lo * y.hi > x.hi * y.lo + kGuardSlack) {
    std::ostringstream os;
    os << x << " / " << y << ": " << x.lo * y.hi << " > " << x.hi * y.lo;
    throw error(errc::order_violation, os.str());
  }
  double lo = x.lo / y.lo;
  double hi = x.hi / y.hi;
  if (hi < lo) hi = lo;
  return detail::make_unchecked(lo, hi);
}

// x ⪰ y: both bounds of x at least those of y. Partial order.
constexpr bool weakly_geq(const Interval& x, const Interval& y) noexcept {
  return x.lo >= y.lo && x.hi >= y.hi;
}

constexpr bool weakly_leq(const Interval& x, const Interval& y) noexcept {
  return weakly_geq(y, x);
}

// Tolerant variants for verifying properties of floating-point results.
inline bool weakly_geq_tol(const Interval& x, const Interval& y,
                           double abs_tol = kAbsTol,
                           double rel_tol = kRelTol) noexcept {
  return approx_leq(y.lo, x.lo, abs_tol, rel_tol) &&
         approx_leq(y.hi, x.hi, abs_tol, rel_tol);
}

inline bool approx_equal(const Interval& x, const Interval& y,
                         double abs_tol = kAbsTol,
                         double rel_tol = kRelTol) noexcept {
  return approx_equal(x.lo, y.lo, abs_tol, rel_tol) &&
         approx_equal(x.hi, y.hi, abs_tol, rel_tol);
}

}  // namespace ivinv

#endif  // IVINV_INTERVAL_HPP
