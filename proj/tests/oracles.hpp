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

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; only its plain data types are used.

#ifndef IVINV_TESTS_ORACLES_HPP
#define IVINV_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "ivinv/coalition.hpp"
#include "ivinv/cost_game.hpp"
#include "ivinv/interval.hpp"
#include "ivinv/inventory.hpp"

namespace ivinv::testing {

using ValueFn = std::function<double(std::uint64_t)>;

// Shapley value by enumerating all n! join orders.
inline std::vector<double> permutation_shapley(std::size_t n,
                                               const ValueFn& c) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> phi(n, 0.0);
  double count = 0.0;
  do {
    std::uint64_t s = 0;
    for (std::size_t agent : order) {
      const std::uint64_t t = s | (std::uint64_t{1} << agent);
      phi[agent] += c(t) - c(s);
      s = t;
    }
    count += 1.0;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& x : phi) x /= count;
  return phi;
}

// c_T = sum_{S subset T} (-1)^{|T|-|S|} c(S), summed literally.
inline double mobius_direct(std::uint64_t t, const ValueFn& c) {
  double sum = 0.0;
  for (std::uint64_t s = 0; s <= t; ++s) {
    if ((s & ~t) != 0) continue;
    const int sign = ((std::popcount(t) - std::popcount(s)) % 2 == 0) ? 1 : -1;
    sum += sign * c(s);
  }
  return sum;
}

// Increasing marginal returns over all S subset T subset N - {i}.
inline bool concave_all_pairs(std::size_t n, const ValueFn& c,
                              double tol = 1e-9) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    const std::uint64_t rest = full & ~bit;
    for (std::uint64_t t = 0; t <= rest; ++t) {
      if ((t & ~rest) != 0) continue;
      for (std::uint64_t s = 0; s <= t; ++s) {
        if ((s & ~t) != 0) continue;
        const double small = c(s | bit) - c(s);
        const double large = c(t | bit) - c(t);
        if (large > small + tol * std::max(1.0, std::abs(small))) return false;
      }
    }
  }
  return true;
}

// 2a sqrt(sum m^2) over a bound selector, ascending members.
inline double inventory_cost(double a, const std::vector<double>& m,
                             std::uint64_t s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if ((s >> i) & 1U) acc += m[i] * m[i];
  }
  return 2.0 * a * std::sqrt(acc);
}

inline std::vector<double> lows(const IntervalInventorySituation& s) {
  std::vector<double> out;
  for (const auto& m : s.frequencies()) out.push_back(m.lo);
  return out;
}

inline std::vector<double> highs(const IntervalInventorySituation& s) {
  std::vector<double> out;
  for (const auto& m : s.frequencies()) out.push_back(m.hi);
  return out;
}

// m.lo ~ U[0.1, 50], m.hi = m.lo * U[1, 3].
inline std::vector<Interval> random_frequencies(std::mt19937_64& rng,
                                                std::size_t n) {
  std::uniform_real_distribution<double> lo(0.1, 50.0), factor(1.0, 3.0);
  std::vector<Interval> m;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = lo(rng);
    m.emplace_back(l, l * factor(rng));
  }
  return m;
}

// Draws until `accept` holds (bounded number of attempts).
template <typename Accept>
IntervalInventorySituation random_situation(std::mt19937_64& rng,
                                            std::size_t n, Accept accept) {
  std::uniform_real_distribution<double> a(0.5, 300.0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    IntervalInventorySituation s(AgentSet::numbered(n), a(rng),
                                 random_frequencies(rng, n));
    if (accept(s)) return s;
  }
  throw std::runtime_error("random_situation: no accepted draw");
}

// Sum of concave functions of additive weights: always submodular.
inline CostGame random_concave_game(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> w(0.0, 10.0), alpha(0.1, 5.0);
  std::vector<std::vector<double>> weights(3, std::vector<double>(n));
  std::vector<double> alphas(3);
  for (auto& row : weights) {
    for (double& x : row) x = w(rng);
  }
  for (double& x : alphas) x = alpha(rng);
  return CostGame::tabulate(AgentSet::numbered(n), [&](Coalition s) {
    double v = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      double acc = 0.0;
      for (std::size_t i : s.members()) acc += weights[k][i];
      v += alphas[k] * (k == 0 ? std::sqrt(acc) : std::log1p(acc));
    }
    return v;
  });
}

inline CostGame random_game(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> v(-10.0, 10.0);
  return CostGame::tabulate(AgentSet::numbered(n),
                            [&](Coalition) { return v(rng); });
}

}  // namespace ivinv::testing

#endif  // IVINV_TESTS_ORACLES_HPP
