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

#ifndef IVINV_PROPERTIES_HPP
#define IVINV_PROPERTIES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ivinv/allocation.hpp"
#include "ivinv/coalition.hpp"
#include "ivinv/error.hpp"
#include "ivinv/interval.hpp"
#include "ivinv/inventory.hpp"
#include "ivinv/tolerance.hpp"

namespace ivinv {

enum class Property { cca, iae, tba, bc, efficiency, core };

constexpr std::string_view to_string(Property p) noexcept {
  switch (p) {
    case Property::cca: return "CCA";
    case Property::iae: return "IAE";
    case Property::tba: return "TBA";
    case Property::bc: return "BC";
    case Property::efficiency: return "EFFICIENCY";
    case Property::core: return "CORE";
  }
  return "?";
}

// Unordered bound pair; property sides need not be valid intervals (BC
// differences, for one).
struct Bounds {
  double lo = 0.0;
  double hi = 0.0;

  Bounds() = default;
  Bounds(double l, double h) : lo(l), hi(h) {}
  Bounds(const Interval& x) : lo(x.lo), hi(x.hi) {}  // NOLINT
};

struct PropertyWitness {
  // Offending coalition; a single agent for per-agent properties and the
  // pair {i, j} for BC.
  Coalition where;
  Bounds lhs;
  Bounds rhs;
};

struct PropertyReport {
  Property property;
  bool holds = true;
  std::vector<PropertyWitness> witnesses;
  // Parts of the check that could not be evaluated (BC pairs whose
  // sub-situation is outside the rule's domain). Not violations.
  std::vector<std::string> skipped;
  double tolerance = kRelTol;

  explicit PropertyReport(Property p) : property(p) {}

  void fail(Coalition where, Bounds lhs, Bounds rhs) {
    holds = false;
    witnesses.push_back({where, lhs, rhs});
  }
};

namespace detail {

// sum_{i in S} alloc_i for every S, ascending member order.
inline std::vector<Interval> coalition_sums(const IntervalAllocation& alloc) {
  const std::size_t count = std::size_t{1} << alloc.size();
  std::vector<Interval> sums(count, Interval(0.0));
  for (std::size_t s = 1; s < count; ++s) {
    const std::size_t top = std::bit_width(s) - 1;
    sums[s] = sums[s ^ (std::size_t{1} << top)] + alloc[top];
  }
  return sums;
}

inline void require_matching(const IntervalInventorySituation& s,
                             const IntervalAllocation& alloc) {
  if (alloc.size() != s.size()) {
    throw error(errc::invalid_argument,
                "allocation has " + std::to_string(alloc.size()) +
                    " shares for " + std::to_string(s.size()) + " agents");
  }
}

}  // namespace detail

inline PropertyReport check_efficiency(const IntervalInventorySituation& s,
                                       const IntervalAllocation& alloc) {
  detail::require_matching(s, alloc);
  PropertyReport r(Property::efficiency);
  const Interval total = alloc.total();
  const Interval target = interval_game_value(s, s.agents().grand());
  if (!approx_equal(total, target)) {
    r.fail(s.agents().grand(), total, target);
  }
  return r;
}

// Cross-coalition acceptability: sum_{j in S} alloc_j ⪯ w(S) for every
// nonempty S. Witnesses in ascending coalition order.
inline PropertyReport check_cca(const IntervalInventorySituation& s,
                                const IntervalAllocation& alloc) {
  detail::require_matching(s, alloc);
  require_agent_count(s.size(), kMaxCheckedAgents, "check_cca");
  PropertyReport r(Property::cca);
  const IntervalGame g = materialize_game(s);
  const auto sums = detail::coalition_sums(alloc);
  for (std::size_t c = 1; c < sums.size(); ++c) {
    const Interval cost = g(Coalition(c));
    if (!weakly_geq_tol(cost, sums[c])) r.fail(Coalition(c), sums[c], cost);
  }
  return r;
}

// Inactive agent exemption: m_j = [0,0] implies a [0,0] share.
template <typename Rule>
PropertyReport check_iae(Rule&& rule, const IntervalInventorySituation& s) {
  PropertyReport r(Property::iae);
  r.tolerance = kAbsTol;
  const IntervalAllocation alloc = rule(s);
  detail::require_matching(s, alloc);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!s.frequency(j).is_zero()) continue;
    const Interval& x = alloc[j];
    if (std::abs(x.lo) > kAbsTol || std::abs(x.hi) > kAbsTol) {
      r.fail(Coalition::singleton(j), x, Interval(0.0));
    }
  }
  return r;
}

// The situation with frequencies sqrt(m_i^2 + mhat_i^2).
inline IntervalInventorySituation combine_situations(
    const IntervalInventorySituation& s1,
    const IntervalInventorySituation& s2) {
  if (!(s1.agents() == s2.agents())) {
    throw error(errc::invalid_argument, "situations have different agents");
  }
  if (s1.ordering_cost() != s2.ordering_cost()) {
    throw error(errc::invalid_argument,
                "situations have different ordering costs");
  }
  std::vector<Interval> m;
  m.reserve(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    m.push_back(sqrt_nonneg(mul_nonneg(s1.frequency(i), s1.frequency(i)) +
                            mul_nonneg(s2.frequency(i), s2.frequency(i))));
  }
  return IntervalInventorySituation(s1.agents(), s1.ordering_cost(),
                                    std::move(m));
}

// Transfer-based additivity, per agent j and boundwise:
//   m_hat(N) Psi_j(combined) = m_N Psi_j(s1) + m_hat_N Psi_j(s2)
// with m_N = sqrt(sum m_i^2). A term whose weight is [0,0] is not evaluated.
template <typename Rule>
PropertyReport check_tba(Rule&& rule, const IntervalInventorySituation& s1,
                         const IntervalInventorySituation& s2) {
  PropertyReport r(Property::tba);
  const IntervalInventorySituation combined = combine_situations(s1, s2);
  IntervalAllocation psi_c;
  try {
    psi_c = rule(combined);
  } catch (const error& e) {
    if (!is_precondition_failure(e.code())) throw;
    throw error(errc::combined_situation_invalid, e.what());
  }
  const Interval w_c = combined.aggregate_frequency();
  const Interval w_1 = s1.aggregate_frequency();
  const Interval w_2 = s2.aggregate_frequency();
  const auto zeros = IntervalAllocation{
      std::vector<Interval>(s1.size(), Interval(0.0))};
  const IntervalAllocation psi_1 = w_1.is_zero() ? zeros : rule(s1);
  const IntervalAllocation psi_2 = w_2.is_zero() ? zeros : rule(s2);
  detail::require_matching(s1, psi_c);
  detail::require_matching(s1, psi_1);
  detail::require_matching(s1, psi_2);
  for (std::size_t j = 0; j < s1.size(); ++j) {
    const Interval lhs = mul_nonneg(w_c, psi_c[j]);
    const Interval rhs = mul_nonneg(w_1, psi_1[j]) + mul_nonneg(w_2, psi_2[j]);
    if (!approx_equal(lhs, rhs)) r.fail(Coalition::singleton(j), lhs, rhs);
  }
  return r;
}

// Balanced contributions, for every pair i < j and both bounds:
//   Psi_i(N) - Psi_i(N - j) = Psi_j(N) - Psi_j(N - i).
// Pairs whose sub-situation lies outside the rule's domain are recorded in
// `skipped`.
template <typename Rule>
PropertyReport check_bc(Rule&& rule, const IntervalInventorySituation& s) {
  const std::size_t n = s.size();
  if (n < 2) {
    throw error(errc::invalid_argument, "BC needs at least two agents");
  }
  PropertyReport r(Property::bc);
  const IntervalAllocation full = rule(s);
  detail::require_matching(s, full);

  std::vector<IntervalAllocation> without(n);
  std::vector<std::string> invalid(n);
  for (std::size_t k = 0; k < n; ++k) {
    try {
      without[k] = rule(s.without(k));
    } catch (const error& e) {
      if (!is_precondition_failure(e.code())) throw;
      invalid[k] = e.what();
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Coalition pair = Coalition::singleton(i).with(j);
      if (!invalid[i].empty() || !invalid[j].empty()) {
        const std::size_t bad = invalid[j].empty() ? i : j;
        r.skipped.push_back(pair.to_string() + ": " +
                            std::string(to_string(errc::sub_situation_invalid)) +
                            " (without " + s.agents().label(bad) + ": " +
                            invalid[bad] + ")");
        continue;
      }
      // Agent i sits at index i in N - j (i < j); agent j at j - 1 in N - i.
      const Interval& i_wo_j = without[j][i];
      const Interval& j_wo_i = without[i][j - 1];
      const Bounds lhs(full[i].lo - i_wo_j.lo, full[i].hi - i_wo_j.hi);
      const Bounds rhs(full[j].lo - j_wo_i.lo, full[j].hi - j_wo_i.hi);
      const double mag = std::max({std::abs(full[i].hi), std::abs(full[j].hi),
                                   std::abs(i_wo_j.hi), std::abs(j_wo_i.hi)});
      const double tol = std::max(kAbsTol, kRelTol * mag);
      if (std::abs(lhs.lo - rhs.lo) > tol || std::abs(lhs.hi - rhs.hi) > tol) {
        r.fail(pair, lhs, rhs);
      }
    }
  }
  return r;
}

// Interval core: boundwise efficiency and w(S) ⪰ sum_{i in S} I_i for all S.
// A failed efficiency clause is reported against the grand coalition.
inline PropertyReport interval_core_contains(const IntervalGame& g,
                                             const IntervalAllocation& alloc) {
  if (alloc.size() != g.size()) {
    throw error(errc::invalid_argument, "allocation size does not match game");
  }
  PropertyReport r(Property::core);
  const auto sums = detail::coalition_sums(alloc);
  const Coalition grand = g.agents().grand();
  if (!approx_equal(sums.back(), g(grand))) {
    r.fail(grand, sums.back(), g(grand));
  }
  for (std::size_t c = 1; c < sums.size(); ++c) {
    const Interval cost = g(Coalition(c));
    if (!weakly_geq_tol(cost, sums[c])) r.fail(Coalition(c), sums[c], cost);
  }
  return r;
}

}  // namespace ivinv

#endif  // IVINV_PROPERTIES_HPP
