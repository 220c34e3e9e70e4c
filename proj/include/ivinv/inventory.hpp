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

#ifndef IVINV_INVENTORY_HPP
#define IVINV_INVENTORY_HPP

#include <bit>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ivinv/coalition.hpp"
#include "ivinv/cost_game.hpp"
#include "ivinv/error.hpp"
#include "ivinv/interval.hpp"
#include "ivinv/tolerance.hpp"

namespace ivinv {

// EOQ agent with known demand rate d >= 0 and holding cost h > 0.
struct DeterministicAgent {
  double demand = 0.0;
  double holding_cost = 1.0;
};

struct IntervalAgent {
  Interval demand;
  double holding_cost = 1.0;
};

namespace detail {

inline void require_eoq_inputs(double demand, double holding_cost,
                               double ordering_cost) {
  if (!(ordering_cost > 0.0)) {
    throw error(errc::invalid_argument, "ordering cost must be positive");
  }
  if (!(holding_cost > 0.0)) {
    throw error(errc::invalid_argument, "holding cost must be positive");
  }
  if (!(demand >= 0.0)) {
    throw error(errc::invalid_argument, "demand must be nonnegative");
  }
}

}  // namespace detail

// Q* = sqrt(2 a d / h).
inline double eoq_order_size(const DeterministicAgent& agent, double a) {
  detail::require_eoq_inputs(agent.demand, agent.holding_cost, a);
  return std::sqrt(2.0 * a * agent.demand / agent.holding_cost);
}

// m = d / Q* = sqrt(d h / (2a)); 0 when d = 0.
inline double eoq_frequency(const DeterministicAgent& agent, double a) {
  detail::require_eoq_inputs(agent.demand, agent.holding_cost, a);
  return std::sqrt(agent.demand * agent.holding_cost / (2.0 * a));
}

// Stand-alone optimal cost 2 a m (= sqrt(2 a d h)).
inline double eoq_optimal_cost(const DeterministicAgent& agent, double a) {
  return 2.0 * a * eoq_frequency(agent, a);
}

struct SocConditionReport {
  bool holds = false;
  // m_i.lo^2 / m_i.hi^2 per agent (0 for m_i.hi = 0).
  std::vector<double> agent_ratios;
  // m_N.lo / m_N.hi with m_N = sqrt(sum m_i^2).
  double aggregate_ratio = 0.0;
  std::size_t worst_agent = 0;

  double max_agent_ratio() const {
    return agent_ratios.empty() ? 0.0 : agent_ratios[worst_agent];
  }
  double margin() const { return aggregate_ratio - max_agent_ratio(); }
};

struct MonotonicityReport {
  bool holds = true;
  // Coalition S and agent i with |w|(S + i) < |w|(S).
  std::optional<std::pair<Coalition, std::size_t>> violation;
};

namespace detail {

inline Interval sum_of_squares(std::span<const Interval> m, Coalition s) {
  Interval acc(0.0);
  for (std::size_t i : s.members()) acc += mul_nonneg(m[i], m[i]);
  return acc;
}

inline SocConditionReport soc_condition(std::span<const Interval> m) {
  bool any_active = false;
  for (const auto& x : m) any_active = any_active || x.hi > 0.0;
  if (!any_active) {
    throw error(errc::all_zero_frequencies,
                "every order frequency is [0,0]; the aggregate ratio is 0/0");
  }
  SocConditionReport r;
  r.agent_ratios.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double ratio =
        m[i].hi > 0.0 ? (m[i].lo * m[i].lo) / (m[i].hi * m[i].hi) : 0.0;
    r.agent_ratios.push_back(ratio);
    if (ratio > r.agent_ratios[r.worst_agent]) r.worst_agent = i;
  }
  const Interval mn =
      sqrt_nonneg(sum_of_squares(m, Coalition::grand(m.size())));
  r.aggregate_ratio = mn.lo / mn.hi;
  r.holds = r.max_agent_ratio() <= r.aggregate_ratio + kGuardSlack;
  return r;
}

// Sum of squared bounds for every coalition, accumulated in ascending member
// order so that entries match sum_of_squares bit for bit.
inline std::pair<std::vector<double>, std::vector<double>> square_tables(
    std::span<const Interval> m) {
  const std::size_t count = std::size_t{1} << m.size();
  std::vector<double> lo(count, 0.0), hi(count, 0.0);
  for (std::size_t s = 1; s < count; ++s) {
    const std::size_t top = std::bit_width(s) - 1;
    const std::size_t rest = s ^ (std::size_t{1} << top);
    lo[s] = lo[rest] + m[top].lo * m[top].lo;
    hi[s] = hi[rest] + m[top].hi * m[top].hi;
  }
  return {std::move(lo), std::move(hi)};
}

inline MonotonicityReport size_monotonic(double a,
                                         std::span<const Interval> m) {
  require_agent_count(m.size(), kMaxCheckedAgents, "validate_size_monotonic");
  auto [lo, hi] = square_tables(m);
  const std::size_t count = lo.size();
  std::vector<double> width(count);
  for (std::size_t s = 0; s < count; ++s) {
    width[s] = 2.0 * a * std::sqrt(hi[s]) - 2.0 * a * std::sqrt(lo[s]);
  }
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (s & bit) continue;
      if (!approx_leq(width[s], width[s | bit])) {
        return MonotonicityReport{false, std::make_pair(Coalition(s), i)};
      }
    }
  }
  return MonotonicityReport{};
}

}  // namespace detail

// (N, a, {m_i}): shared ordering cost a > 0 and interval order frequencies.
// Both applicability flags are evaluated once at construction.
class IntervalInventorySituation {
 public:
  IntervalInventorySituation(AgentSet agents, double ordering_cost,
                             std::vector<Interval> frequencies)
      : agents_(std::move(agents)),
        ordering_cost_(ordering_cost),
        m_(std::move(frequencies)) {
    if (!(ordering_cost_ > 0.0)) {
      throw error(errc::invalid_situation, "ordering cost must be positive");
    }
    if (m_.size() != agents_.size()) {
      throw error(errc::invalid_situation,
                  "one order frequency per agent is required");
    }
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (!(m_[i].lo >= 0.0) || !(m_[i].lo <= m_[i].hi) ||
          !std::isfinite(m_[i].hi)) {
        std::ostringstream os;
        os << "agent " << agents_.label(i) << ": invalid frequency " << m_[i];
        throw error(errc::invalid_situation, os.str());
      }
    }
    soc_valid_ = compute_soc_flag();
    if (m_.size() <= kMaxCheckedAgents) {
      shapley_valid_ = detail::size_monotonic(ordering_cost_, m_).holds;
    }
  }

  const AgentSet& agents() const noexcept { return agents_; }
  std::size_t size() const noexcept { return m_.size(); }
  double ordering_cost() const noexcept { return ordering_cost_; }
  std::span<const Interval> frequencies() const noexcept { return m_; }
  const Interval& frequency(std::size_t i) const { return m_.at(i); }

  // Condition under which the interval SOC division is defined.
  bool soc_valid() const noexcept { return soc_valid_; }
  // Length game monotone; false when n exceeds the exhaustive-check limit.
  bool shapley_valid() const noexcept { return shapley_valid_; }

  bool all_inactive() const noexcept {
    for (const auto& x : m_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  // m_N = sqrt(sum m_i^2).
  Interval aggregate_frequency() const {
    return sqrt_nonneg(detail::sum_of_squares(m_, agents_.grand()));
  }

  // The situation without agent j; a and the remaining m are unchanged.
  IntervalInventorySituation without(std::size_t j) const {
    if (j >= size()) throw error(errc::invalid_argument, "agent out of range");
    std::vector<Interval> rest;
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (i != j) rest.push_back(m_[i]);
    }
    return IntervalInventorySituation(agents_.without(j), ordering_cost_,
                                      std::move(rest));
  }

 private:
  bool compute_soc_flag() const {
    if (all_inactive()) return true;
    return detail::soc_condition(m_).holds;
  }

  AgentSet agents_;
  double ordering_cost_;
  std::vector<Interval> m_;
  bool soc_valid_ = false;
  bool shapley_valid_ = false;
};

// m_i = [sqrt(d.lo h / 2a), sqrt(d.hi h / 2a)] for every agent.
inline IntervalInventorySituation build_situation_from_demand(
    AgentSet agents, std::span<const IntervalAgent> data, double a) {
  if (data.size() != agents.size()) {
    throw error(errc::invalid_situation, "one demand record per agent");
  }
  std::vector<Interval> m;
  m.reserve(data.size());
  for (const auto& ag : data) {
    const double lo = eoq_frequency({ag.demand.lo, ag.holding_cost}, a);
    const double hi = eoq_frequency({ag.demand.hi, ag.holding_cost}, a);
    m.emplace_back(lo, hi);
  }
  return IntervalInventorySituation(std::move(agents), a, std::move(m));
}

// Condition for the interval SOC-rule:
//   max_i m_i.lo^2 / m_i.hi^2 <= m_N.lo / m_N.hi.
inline SocConditionReport validate_soc_condition(
    const IntervalInventorySituation& s) {
  return detail::soc_condition(s.frequencies());
}

// Length game |w|(S) = w.hi(S) - w.lo(S) nondecreasing under single-agent
// additions (which implies monotonicity over all S subset T).
inline MonotonicityReport validate_size_monotonic(
    const IntervalInventorySituation& s) {
  return detail::size_monotonic(s.ordering_cost(), s.frequencies());
}

// w(S) = 2a sqrt(sum_{i in S} m_i^2); [0,0] for the empty coalition.
inline Interval interval_game_value(const IntervalInventorySituation& s,
                                    Coalition coalition) {
  const Interval sq = detail::sum_of_squares(s.frequencies(), coalition);
  return scale(2.0 * s.ordering_cost(), sqrt_nonneg(sq));
}

// Interval cost game stored as its two border games.
class IntervalGame {
 public:
  IntervalGame(CostGame lower, CostGame upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (!(lower_.agents() == upper_.agents())) {
      throw error(errc::invalid_game, "border games have different agents");
    }
    const auto lo = lower_.values();
    const auto hi = upper_.values();
    for (std::size_t s = 0; s < lo.size(); ++s) {
      if (!approx_leq(lo[s], hi[s])) {
        throw error(errc::invalid_game,
                    "lower border exceeds upper border at " +
                        Coalition(s).to_string());
      }
    }
  }

  const AgentSet& agents() const noexcept { return lower_.agents(); }
  std::size_t size() const noexcept { return lower_.size(); }
  const CostGame& lower() const noexcept { return lower_; }
  const CostGame& upper() const noexcept { return upper_; }

  Interval operator()(Coalition s) const {
    return detail::make_unchecked(lower_(s), std::max(lower_(s), upper_(s)));
  }
  double length(Coalition s) const { return upper_(s) - lower_(s); }

  CostGame length_game() const {
    return CostGame::tabulate(agents(), [this](Coalition s) {
      return length(s);
    });
  }

 private:
  CostGame lower_;
  CostGame upper_;
};

inline IntervalGame materialize_game(const IntervalInventorySituation& s) {
  require_agent_count(s.size(), kMaxCheckedAgents, "materialize_game");
  auto [lo, hi] = detail::square_tables(s.frequencies());
  const double two_a = 2.0 * s.ordering_cost();
  for (std::size_t k = 0; k < lo.size(); ++k) {
    lo[k] = two_a * std::sqrt(lo[k]);
    hi[k] = two_a * std::sqrt(hi[k]);
  }
  return IntervalGame(CostGame(s.agents(), std::move(lo)),
                      CostGame(s.agents(), std::move(hi)));
}

}  // namespace ivinv

#endif  // IVINV_INVENTORY_HPP
