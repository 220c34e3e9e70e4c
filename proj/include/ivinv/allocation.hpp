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

#ifndef IVINV_ALLOCATION_HPP
#define IVINV_ALLOCATION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ivinv/cost_game.hpp"
#include "ivinv/error.hpp"
#include "ivinv/interval.hpp"
#include "ivinv/inventory.hpp"
#include "ivinv/shapley_sampler.hpp"
#include "ivinv/tolerance.hpp"

namespace ivinv {

// One interval share per agent. Rule outputs sum to w(N) boundwise.
struct IntervalAllocation {
  std::vector<Interval> shares;

  std::size_t size() const noexcept { return shares.size(); }
  const Interval& operator[](std::size_t i) const { return shares[i]; }

  Interval total() const noexcept {
    Interval t(0.0);
    for (const auto& x : shares) t += x;
    return t;
  }
};

// Stand-alone costs 2a m_i. Not an allocation: they sum to more than w(N).
inline std::vector<Interval> individual_costs(
    const IntervalInventorySituation& s) {
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& m : s.frequencies()) {
    out.push_back(scale(2.0 * s.ordering_cost(), m));
  }
  return out;
}

// Interval SOC-rule: share_j = 2a m_j^2 / sqrt(sum_i m_i^2), boundwise.
inline IntervalAllocation interval_soc(const IntervalInventorySituation& s) {
  IntervalAllocation out;
  out.shares.assign(s.size(), Interval(0.0));
  if (s.all_inactive()) return out;
  if (!s.soc_valid()) {
    const auto report = validate_soc_condition(s);
    std::ostringstream os;
    os << "agent " << s.agents().label(report.worst_agent)
       << " has squared bound ratio " << report.max_agent_ratio()
       << " > aggregate ratio " << report.aggregate_ratio;
    throw error(errc::soc_condition_violated, os.str());
  }
  const Interval mn = s.aggregate_frequency();
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Interval num = scale(2.0 * s.ordering_cost(),
                               mul_nonneg(s.frequency(j), s.frequency(j)));
    if (mn.lo == 0.0) {
      // Every lower bound is 0, so every lower share is 0.
      out.shares[j] = detail::make_unchecked(0.0, num.hi / mn.hi);
      continue;
    }
    try {
      out.shares[j] = div_checked(num, mn);
    } catch (const error& e) {
      throw error(errc::soc_condition_violated, e.what());
    }
  }
  return out;
}

namespace detail {

inline void require_shapley_applicable(const IntervalInventorySituation& s) {
  require_agent_count(s.size(), kMaxCheckedAgents, "interval_shapley");
  if (!s.shapley_valid()) {
    const auto report = validate_size_monotonic(s);
    std::string where = "length game is not monotone";
    if (report.violation) {
      where += ": |w|(" + report.violation->first.to_string() + " + " +
               s.agents().label(report.violation->second) + ") < |w|(" +
               report.violation->first.to_string() + ")";
    }
    throw error(errc::not_size_monotonic, where);
  }
}

// Pairs lower/upper border values into intervals; a lower value above the
// upper one by more than rounding is a logic error.
inline IntervalAllocation pair_bounds(const std::vector<double>& lo,
                                      const std::vector<double>& hi) {
  IntervalAllocation out;
  out.shares.reserve(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    double l = lo[i];
    double h = hi[i];
    if (h < l) {
      if (!approx_leq(l, h)) {
        std::ostringstream os;
        os << "share " << i << " has lower bound " << l << " above upper "
           << h;
        throw std::logic_error(os.str());
      }
      h = l;
    }
    out.shares.push_back(make_unchecked(l, h));
  }
  return out;
}

}  // namespace detail

// Interval Shapley rule: [phi_j(lower border), phi_j(upper border)].
inline IntervalAllocation interval_shapley(const IntervalInventorySituation& s) {
  detail::require_shapley_applicable(s);
  const IntervalGame g = materialize_game(s);
  return detail::pair_bounds(shapley_exact(g.lower()).shares,
                             shapley_exact(g.upper()).shares);
}

// Sampled interval Shapley rule. Both border games are evaluated on the same
// permutations, so each per-order marginal has lo <= hi under
// size-monotonicity; each border is rescaled to its own grand value.
inline IntervalAllocation interval_shapley_sampled(
    const IntervalInventorySituation& s, std::size_t samples,
    std::uint64_t seed, SamplerMode mode = SamplerMode::automatic,
    SamplerStats* stats = nullptr, unsigned threads = 0) {
  detail::require_shapley_applicable(s);
  const auto m = s.frequencies();
  const double two_a = 2.0 * s.ordering_cost();
  auto value = [m, two_a](Coalition c) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t i : c.members()) {
      lo += m[i].lo * m[i].lo;
      hi += m[i].hi * m[i].hi;
    }
    return std::array<double, 2>{two_a * std::sqrt(lo), two_a * std::sqrt(hi)};
  };
  SamplerOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.mode = mode;
  opts.threads = threads;
  auto est = sample_shapley<2>(s.size(), value, opts, stats);
  return detail::pair_bounds(est[0], est[1]);
}

// Splits w(N) in proportion to m_i boundwise:
//   [w.lo(N) m_i.lo / sum m.lo, w.hi(N) m_i.hi / sum m.hi].
// Reproduces the reference SOC column of the airport case study, which is
// not what the squared-frequency formula yields; kept for comparison only.
inline IntervalAllocation proportional_frequency_split(
    const IntervalInventorySituation& s) {
  const Interval total = interval_game_value(s, s.agents().grand());
  double sum_lo = 0.0, sum_hi = 0.0;
  for (const auto& m : s.frequencies()) {
    sum_lo += m.lo;
    sum_hi += m.hi;
  }
  IntervalAllocation out;
  for (const auto& m : s.frequencies()) {
    const double lo = sum_lo > 0.0 ? total.lo * m.lo / sum_lo : 0.0;
    const double hi = sum_hi > 0.0 ? total.hi * m.hi / sum_hi : 0.0;
    out.shares.push_back(detail::make_unchecked(lo, std::max(lo, hi)));
  }
  return out;
}

// Equal split of w(N) among active agents, [0,0] to inactive ones.
// Satisfies IAE but not TBA.
inline IntervalAllocation fixture_no_tba(const IntervalInventorySituation& s) {
  std::size_t active = 0;
  for (const auto& m : s.frequencies()) active += m.is_zero() ? 0 : 1;
  if (active == 0) {
    throw error(errc::all_agents_inactive, "no agent has a nonzero frequency");
  }
  const Interval part = scale(1.0 / static_cast<double>(active),
                              interval_game_value(s, s.agents().grand()));
  IntervalAllocation out;
  for (const auto& m : s.frequencies()) {
    out.shares.push_back(m.is_zero() ? Interval(0.0) : part);
  }
  return out;
}

// SOC-rule with the two shares swapped when |N| = 2, SOC-rule otherwise.
// Satisfies TBA but not IAE.
inline IntervalAllocation fixture_no_iae(const IntervalInventorySituation& s) {
  IntervalAllocation out = interval_soc(s);
  if (out.size() == 2) std::swap(out.shares[0], out.shares[1]);
  return out;
}

}  // namespace ivinv

#endif  // IVINV_ALLOCATION_HPP
