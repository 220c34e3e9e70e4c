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

#ifndef IVINV_COST_GAME_HPP
#define IVINV_COST_GAME_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivinv/coalition.hpp"
#include "ivinv/error.hpp"
#include "ivinv/shapley_sampler.hpp"
#include "ivinv/tolerance.hpp"

namespace ivinv {

// A TU cost game (N, c) with c tabulated over all 2^n coalitions.
class CostGame {
 public:
  CostGame(AgentSet agents, std::vector<double> values)
      : agents_(std::move(agents)), values_(std::move(values)) {
    require_agent_count(agents_.size(), kMaxTabulatedAgents, "CostGame");
    const std::size_t expected = std::size_t{1} << agents_.size();
    if (values_.size() != expected) {
      throw error(errc::invalid_game,
                  "expected " + std::to_string(expected) +
                      " coalition values, got " +
                      std::to_string(values_.size()));
    }
    if (values_[0] != 0.0) {
      throw error(errc::invalid_game, "c(empty set) must be 0");
    }
  }

  // Builds the table from fn(Coalition) -> double. fn(empty) is forced to 0.
  template <typename Fn>
  static CostGame tabulate(AgentSet agents, Fn&& fn) {
    require_agent_count(agents.size(), kMaxTabulatedAgents, "CostGame");
    const std::size_t count = std::size_t{1} << agents.size();
    std::vector<double> values(count, 0.0);
    for (std::size_t s = 1; s < count; ++s) values[s] = fn(Coalition(s));
    return CostGame(std::move(agents), std::move(values));
  }

  const AgentSet& agents() const noexcept { return agents_; }
  std::size_t size() const noexcept { return agents_.size(); }
  Coalition grand() const noexcept { return agents_.grand(); }
  double operator()(Coalition s) const { return values_[s.index()]; }
  double grand_value() const { return values_.back(); }
  std::span<const double> values() const noexcept { return values_; }

 private:
  AgentSet agents_;
  std::vector<double> values_;
};

struct RealAllocation {
  std::vector<double> shares;

  double total() const noexcept {
    double s = 0.0;
    for (double x : shares) s += x;
    return s;
  }
  double operator[](std::size_t i) const { return shares[i]; }
  std::size_t size() const noexcept { return shares.size(); }
};

// Coefficients c_T of c = sum_T c_T u_T, indexed by coalition. Entry 0 is 0.
// Fast Moebius transform, O(2^n n).
inline std::vector<double> unanimity_coefficients(const CostGame& g) {
  std::vector<double> coef(g.values().begin(), g.values().end());
  const std::size_t n = g.size();
  const std::size_t count = coef.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < count; ++s) {
      if (s & bit) coef[s] -= coef[s ^ bit];
    }
  }
  return coef;
}

// Inverse of unanimity_coefficients: c(S) = sum_{T subset of S} c_T.
inline CostGame from_unanimity_coefficients(AgentSet agents,
                                            std::vector<double> coef) {
  const std::size_t n = agents.size();
  require_agent_count(n, kMaxTabulatedAgents, "CostGame");
  if (coef.size() != (std::size_t{1} << n)) {
    throw error(errc::invalid_game, "coefficient table has the wrong size");
  }
  coef[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < coef.size(); ++s) {
      if (s & bit) coef[s] += coef[s ^ bit];
    }
  }
  return CostGame(std::move(agents), std::move(coef));
}

// The unanimity game kappa * u_T: c(S) = kappa if T is a subset of S.
inline CostGame unanimity_game(AgentSet agents, Coalition carrier,
                               double kappa = 1.0) {
  return CostGame::tabulate(std::move(agents), [&](Coalition s) {
    return carrier.subset_of(s) ? kappa : 0.0;
  });
}

namespace detail {

// k! (n-k-1)! / n! for k = 0..n-1.
inline std::vector<double> shapley_weights(std::size_t n) {
  std::vector<double> w(n);
  w[0] = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    w[k + 1] = w[k] * static_cast<double>(k + 1) /
               static_cast<double>(n - k - 1);
  }
  return w;
}

}  // namespace detail

// Shapley value by the subset-weight formula, O(2^n n).
inline RealAllocation shapley_exact(const CostGame& g) {
  const std::size_t n = g.size();
  require_agent_count(n, kMaxTabulatedAgents, "shapley_exact");
  const auto w = detail::shapley_weights(n);
  const auto v = g.values();
  std::vector<double> phi(n, 0.0);
  for (std::size_t s = 0; s < v.size(); ++s) {
    const std::size_t k = Coalition(s).size();
    if (k == n) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (s & bit) continue;
      phi[i] += w[k] * (v[s | bit] - v[s]);
    }
  }
  return RealAllocation{std::move(phi)};
}

// Permutation-sampling estimate of shapley_exact, rescaled to c(N).
inline RealAllocation shapley_sampled(const CostGame& g, std::size_t samples,
                                      std::uint64_t seed,
                                      SamplerMode mode = SamplerMode::automatic,
                                      SamplerStats* stats = nullptr) {
  SamplerOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.mode = mode;
  auto est = sample_shapley<1>(
      g.size(),
      [&g](Coalition s) { return std::array<double, 1>{g(s)}; }, opts, stats);
  return RealAllocation{std::move(est[0])};
}

struct ConcavityWitness {
  Coalition smaller;  // S
  Coalition larger;   // T = S + {j}
  std::size_t agent;  // i, outside T
  double marginal_smaller;
  double marginal_larger;
};

struct ConcavityResult {
  bool concave = true;
  std::optional<ConcavityWitness> witness;

  explicit operator bool() const noexcept { return concave; }
};

// Submodularity via the pairwise form
//   c(S+i) - c(S) >= c(S+i+j) - c(S+j)   for all S and i != j outside S,
// which is equivalent to increasing marginal returns over all S subset T.
// Reports the first violation in ascending (S, i, j) order.
inline ConcavityResult is_concave(const CostGame& g) {
  const std::size_t n = g.size();
  require_agent_count(n, kMaxCheckedAgents, "is_concave");
  const auto v = g.values();
  for (std::size_t s = 0; s < v.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bi = std::size_t{1} << i;
      if (s & bi) continue;
      const double small = v[s | bi] - v[s];
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t bj = std::size_t{1} << j;
        if (j == i || (s & bj)) continue;
        const double large = v[s | bi | bj] - v[s | bj];
        if (!approx_leq(large, small)) {
          return ConcavityResult{
              false, ConcavityWitness{Coalition(s), Coalition(s | bj), i,
                                      small, large}};
        }
      }
    }
  }
  return ConcavityResult{};
}

// First coalition whose summed shares exceed its cost, if any.
inline std::optional<Coalition> core_violation(const CostGame& g,
                                               const RealAllocation& x) {
  const std::size_t n = g.size();
  if (x.size() != n) {
    throw error(errc::invalid_argument, "allocation size does not match game");
  }
  const auto v = g.values();
  std::vector<double> sums(v.size(), 0.0);
  for (std::size_t s = 1; s < v.size(); ++s) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    sums[s] = sums[s & (s - 1)] + x[low];
    if (!approx_leq(sums[s], v[s])) return Coalition(s);
  }
  return std::nullopt;
}

inline bool is_efficient(const CostGame& g, const RealAllocation& x) {
  return approx_equal(x.total(), g.grand_value());
}

inline bool core_contains(const CostGame& g, const RealAllocation& x) {
  return is_efficient(g, x) && !core_violation(g, x).has_value();
}

}  // namespace ivinv

#endif  // IVINV_COST_GAME_HPP
