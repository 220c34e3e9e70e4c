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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "case_study.hpp"
#include "ivinv/cost_game.hpp"
#include "ivinv/inventory.hpp"
#include "oracles.hpp"

namespace ivinv {
namespace {

IntervalInventorySituation Make(double a, std::vector<Interval> m) {
  const std::size_t n = m.size();
  return IntervalInventorySituation(AgentSet::numbered(n), a, std::move(m));
}

IntervalInventorySituation Example1() {
  return Make(1.0, {{1, 2}, {2, 3}, {3, 4}});
}

IntervalInventorySituation Example2() {
  return Make(1.0, {{1, 3}, {2, 4}, {3, 5}});
}

TEST(EoqTest, OrderSize) {
  EXPECT_NEAR(eoq_order_size({175000, 10}, 200), std::sqrt(7e6), 1e-9);
  EXPECT_NEAR(eoq_order_size({175000, 10}, 200), 2645.75, 0.005);
  EXPECT_EQ(eoq_order_size({0, 3}, 5), 0.0);
  EXPECT_NEAR(eoq_order_size({2.5, 5}, 1), 1.0, 1e-15);
}

TEST(EoqTest, Frequency) {
  EXPECT_NEAR(eoq_frequency({175000, 10}, 200), 66.14, 0.005);
  // 90.1388 appears as 90.13 in the reference list.
  EXPECT_NEAR(eoq_frequency({325000, 10}, 200), 90.13, 0.01);
  EXPECT_EQ(eoq_frequency({0, 10}, 200), 0.0);
}

TEST(EoqTest, OptimalCost) {
  EXPECT_NEAR(eoq_optimal_cost({175000, 10}, 200), 26457.51, 0.005);
  EXPECT_EQ(eoq_optimal_cost({0, 10}, 200), 0.0);
  EXPECT_NEAR(eoq_optimal_cost({1, 1}, 0.5), 1.0, 1e-15);
}

TEST(EoqTest, RejectsBadInputs) {
  EXPECT_THROW(eoq_frequency({1, 0}, 1), error);
  EXPECT_THROW(eoq_frequency({1, 1}, 0), error);
  EXPECT_THROW(eoq_frequency({-1, 1}, 1), error);
}

TEST(EoqTest, CostMatchesClosedFormOnRandomInputs) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(0, 1e6), h(0.1, 50), a(0.1, 500);
  for (int t = 0; t < 500; ++t) {
    const DeterministicAgent ag{d(rng), h(rng)};
    const double ord = a(rng);
    const double direct = std::sqrt(2 * ord * ag.demand * ag.holding_cost);
    EXPECT_TRUE(approx_equal(eoq_optimal_cost(ag, ord), direct, 0, 1e-9));
    EXPECT_TRUE(approx_equal(eoq_optimal_cost(ag, ord),
                             2 * ord * eoq_frequency(ag, ord), 0, 1e-9));
  }
}

TEST(SituationTest, CaseStudyFrequencies) {
  const auto s = testing::case_study::situation();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& row = testing::case_study::kRows[i];
    EXPECT_NEAR(s.frequency(i).lo, row.m_lo, 0.01) << row.id;
    EXPECT_NEAR(s.frequency(i).hi, row.m_hi, 0.01) << row.id;
  }
  EXPECT_TRUE(s.soc_valid());
  EXPECT_TRUE(s.shapley_valid());
}

TEST(SituationTest, CaseStudyTotal) {
  const auto s = testing::case_study::situation();
  const Interval w = interval_game_value(s, s.agents().grand());
  EXPECT_NEAR(w.lo, testing::case_study::kTotalLo, 0.5);
  EXPECT_NEAR(w.hi, testing::case_study::kTotalHi, 0.5);
}

TEST(SituationTest, ZeroDemandSingleAgent) {
  const IntervalAgent ag{Interval(0.0), 4.0};
  const auto s = build_situation_from_demand(AgentSet::numbered(1),
                                             std::span(&ag, 1), 3.0);
  EXPECT_TRUE(s.frequency(0).is_zero());
  EXPECT_TRUE(s.soc_valid());
  EXPECT_TRUE(s.shapley_valid());
  EXPECT_TRUE(s.all_inactive());
}

TEST(SituationTest, IdenticalAgentsAreSocValid) {
  const std::vector<IntervalAgent> ags(4, IntervalAgent{{70, 130}, 2.0});
  const auto s = build_situation_from_demand(AgentSet::numbered(4), ags, 5.0);
  EXPECT_TRUE(s.soc_valid());
}

TEST(SituationTest, RejectsInvalidInputs) {
  EXPECT_THROW(Make(0.0, {{1, 2}}), error);
  EXPECT_THROW(Make(1.0, {detail::make_unchecked(-1, 2)}), error);
  EXPECT_THROW(IntervalInventorySituation(AgentSet::numbered(2), 1.0, {{1, 2}}),
               error);
}

TEST(SituationTest, WithoutKeepsLabelsAndFrequencies) {
  const auto s = Example2().without(1);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.agents().label(0), "1");
  EXPECT_EQ(s.agents().label(1), "3");
  EXPECT_EQ(s.frequency(1), Interval(3, 5));
}

TEST(SocConditionTest, Examples) {
  EXPECT_TRUE(validate_soc_condition(Example1()).holds);
  EXPECT_FALSE(validate_soc_condition(Make(1.0, {{1, 10}, {5, 5}})).holds);
  EXPECT_FALSE(Make(1.0, {{1, 10}, {5, 5}}).soc_valid());
}

TEST(SocConditionTest, CaseStudyMargins) {
  const auto r = validate_soc_condition(testing::case_study::situation());
  EXPECT_TRUE(r.holds);
  // Frozen from the unrounded frequencies; 0.5392 when the rounded
  // two-decimal m are used instead.
  EXPECT_NEAR(r.max_agent_ratio(), 0.53968, 5e-5);
  EXPECT_NEAR(r.aggregate_ratio, 0.7338, 5e-5);
  EXPECT_GT(r.margin(), 0.19);
}

TEST(SocConditionTest, AllZeroFrequencies) {
  try {
    validate_soc_condition(Make(1.0, {Interval(0.0), Interval(0.0)}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::all_zero_frequencies);
  }
}

TEST(SizeMonotonicTest, Examples) {
  EXPECT_TRUE(validate_size_monotonic(Example2()).holds);
  EXPECT_TRUE(
      validate_size_monotonic(testing::case_study::situation()).holds);
  EXPECT_TRUE(validate_size_monotonic(Make(2.0, {{1, 1}, {3, 3}, {2, 2}})).holds);
}

TEST(SizeMonotonicTest, ReportsFirstViolation) {
  // |w|({1}) = 20 but |w|({1,2}) = 2 sqrt(200) - 20 < 20.
  const auto r = validate_size_monotonic(Make(1.0, {{0, 10}, {10, 10}}));
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_EQ(r.violation->first, Coalition(0b01));
  EXPECT_EQ(r.violation->second, 1u);
}

TEST(GameValueTest, Examples) {
  const auto s = Example1();
  const Interval w = interval_game_value(s, s.agents().grand());
  EXPECT_NEAR(w.lo, 2 * std::sqrt(14.0), 1e-12);
  EXPECT_NEAR(w.hi, 2 * std::sqrt(29.0), 1e-12);
  EXPECT_NEAR(w.lo, 7.4833, 5e-5);
  EXPECT_NEAR(w.hi, 10.7703, 5e-5);
  EXPECT_EQ(interval_game_value(s, Coalition()), Interval(0.0));
}

TEST(MaterializeTest, Example2Borders) {
  const IntervalGame g = materialize_game(Example2());
  EXPECT_NEAR(g.lower().grand_value(), 2 * std::sqrt(14.0), 1e-12);
  EXPECT_NEAR(g.upper().grand_value(), 2 * std::sqrt(50.0), 1e-12);
  EXPECT_NEAR(g.length(Coalition(0b111)),
              2 * std::sqrt(50.0) - 2 * std::sqrt(14.0), 1e-12);
}

TEST(MaterializeTest, ZeroAgentBordersVanish) {
  const IntervalGame g = materialize_game(Make(1.0, {Interval(0.0)}));
  EXPECT_EQ(g.lower()(Coalition(1)), 0.0);
  EXPECT_EQ(g.upper()(Coalition(1)), 0.0);
}

TEST(MaterializeTest, MatchesGameValueBitwise) {
  std::mt19937_64 rng(8);
  const auto s = testing::random_situation(rng, 6, [](const auto&) { return true; });
  const IntervalGame g = materialize_game(s);
  for (std::size_t c = 0; c < 64; ++c) {
    EXPECT_EQ(g(Coalition(c)), interval_game_value(s, Coalition(c)));
  }
}

TEST(MaterializeTest, RejectsBorderInversion) {
  const CostGame lo(AgentSet::numbered(1), {0.0, 2.0});
  const CostGame hi(AgentSet::numbered(1), {0.0, 1.0});
  EXPECT_THROW(IntervalGame(lo, hi), error);
}

// Random situations with bounds uniform on [0, 100].
class RandomSituationTest : public ::testing::Test {
 protected:
  IntervalInventorySituation Draw(std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 100.0), a(0.5, 50.0);
    std::vector<Interval> m;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = u(rng_), y = u(rng_);
      m.emplace_back(std::min(x, y), std::max(x, y));
    }
    return Make(a(rng_), std::move(m));
  }
  std::mt19937_64 rng_{20240917};
};

TEST_F(RandomSituationTest, GamesAreConcave) {
  std::uniform_int_distribution<std::size_t> size(1, 6);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    const auto s = Draw(size(rng_));
    const IntervalGame g = materialize_game(s);
    violations += is_concave(g.lower()).concave ? 0 : 1;
    violations += is_concave(g.upper()).concave ? 0 : 1;
    const auto lo = testing::lows(s), hi = testing::highs(s);
    const double a = s.ordering_cost();
    violations += testing::concave_all_pairs(
                      s.size(), [&](std::uint64_t c) {
                        return testing::inventory_cost(a, lo, c);
                      })
                      ? 0
                      : 1;
    violations += testing::concave_all_pairs(
                      s.size(), [&](std::uint64_t c) {
                        return testing::inventory_cost(a, hi, c);
                      })
                      ? 0
                      : 1;
  }
  EXPECT_EQ(violations, 0);
}

TEST_F(RandomSituationTest, ValueGrowsWithCoalition) {
  for (int t = 0; t < 100; ++t) {
    const auto s = Draw(5);
    for (std::size_t c = 0; c < 32; ++c) {
      for_each_subset(Coalition(c), [&](Coalition sub) {
        EXPECT_TRUE(weakly_geq(interval_game_value(s, Coalition(c)),
                               interval_game_value(s, sub)));
      });
    }
  }
}

TEST_F(RandomSituationTest, ValueIsSubadditive) {
  for (int t = 0; t < 100; ++t) {
    const auto s = Draw(6);
    for (std::size_t x = 0; x < 64; ++x) {
      const std::size_t rest = 63 & ~x;
      for_each_subset(Coalition(rest), [&](Coalition y) {
        const Interval joint = interval_game_value(s, Coalition(x) | y);
        const Interval parts = interval_game_value(s, Coalition(x)) +
                               interval_game_value(s, y);
        EXPECT_TRUE(approx_leq(joint.lo, parts.lo));
        EXPECT_TRUE(approx_leq(joint.hi, parts.hi));
      });
    }
  }
}

TEST_F(RandomSituationTest, MonotonicityMatchesAllPairs) {
  for (int t = 0; t < 200; ++t) {
    const auto s = Draw(4);
    const IntervalGame g = materialize_game(s);
    bool all_pairs = true;
    for (std::size_t big = 0; big < 16; ++big) {
      for_each_subset(Coalition(big), [&](Coalition small) {
        all_pairs = all_pairs &&
                    approx_leq(g.length(small), g.length(Coalition(big)));
      });
    }
    EXPECT_EQ(validate_size_monotonic(s).holds, all_pairs);
    EXPECT_EQ(s.shapley_valid(), all_pairs);
  }
}

TEST_F(RandomSituationTest, DegenerateSituationsReduceToRealGame) {
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int t = 0; t < 50; ++t) {
    std::vector<Interval> m;
    for (int i = 0; i < 5; ++i) m.emplace_back(u(rng_));
    const auto s = Make(3.0, m);
    const IntervalGame g = materialize_game(s);
    EXPECT_TRUE(std::ranges::equal(g.lower().values(), g.upper().values()));
    EXPECT_TRUE(s.shapley_valid());
    EXPECT_TRUE(s.soc_valid());
  }
}

TEST(ConsistencyTest, DemandPathMatchesCostPath) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> d(0, 1e5), h(0.5, 20);
  for (int t = 0; t < 100; ++t) {
    std::vector<IntervalAgent> ags;
    for (int i = 0; i < 4; ++i) {
      const double x = d(rng), y = d(rng);
      ags.push_back({Interval(std::min(x, y), std::max(x, y)), h(rng)});
    }
    const double a = 75.0;
    const auto s = build_situation_from_demand(AgentSet::numbered(4), ags, a);
    for (std::size_t i = 0; i < 4; ++i) {
      const double lo = eoq_optimal_cost({ags[i].demand.lo, ags[i].holding_cost}, a);
      const double hi = eoq_optimal_cost({ags[i].demand.hi, ags[i].holding_cost}, a);
      EXPECT_TRUE(approx_equal(lo, 2 * a * s.frequency(i).lo, 0, 1e-9));
      EXPECT_TRUE(approx_equal(hi, 2 * a * s.frequency(i).hi, 0, 1e-9));
    }
  }
}

}  // namespace
}  // namespace ivinv
