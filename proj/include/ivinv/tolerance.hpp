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

#ifndef IVINV_TOLERANCE_HPP
#define IVINV_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace ivinv {

inline constexpr double kAbsTol = 1e-9;
inline constexpr double kRelTol = 1e-9;
// Slack on definedness guards of interval operations (absolute).
inline constexpr double kGuardSlack = 1e-12;

// max(abs, rel * magnitude); game values in the case study are ~1e4..1e5.
inline double tolerance_for(double a, double b, double abs_tol = kAbsTol,
                            double rel_tol = kRelTol) noexcept {
  return std::max(abs_tol, rel_tol * std::max(std::abs(a), std::abs(b)));
}

inline bool approx_equal(double a, double b, double abs_tol = kAbsTol,
                         double rel_tol = kRelTol) noexcept {
  return std::abs(a - b) <= tolerance_for(a, b, abs_tol, rel_tol);
}

inline bool approx_leq(double a, double b, double abs_tol = kAbsTol,
                       double rel_tol = kRelTol) noexcept {
  return a <= b + tolerance_for(a, b, abs_tol, rel_tol);
}

}  // namespace ivinv

#endif  // IVINV_TOLERANCE_HPP
