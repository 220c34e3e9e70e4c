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

#ifndef IVINV_SHAPLEY_SAMPLER_HPP
#define IVINV_SHAPLEY_SAMPLER_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "ivinv/coalition.hpp"
#include "ivinv/error.hpp"

namespace ivinv {

enum class SamplerMode {
  // Enumerate all n! orders when samples >= n!, otherwise sample.
  automatic,
  monte_carlo,
  exhaustive,
};

struct SamplerOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  SamplerMode mode = SamplerMode::automatic;
  // 0 picks std::thread::hardware_concurrency(). Output does not depend on it.
  unsigned threads = 0;
};

struct SamplerStats {
  bool exhaustive = false;
  std::size_t permutations = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased draw from [0, bound) by rejection; portable unlike
// std::uniform_int_distribution.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

inline void shuffle(std::vector<std::size_t>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(order[i - 1], order[j]);
  }
}

// n! if it fits in size_t and n <= 20, else 0.
inline std::size_t factorial_or_zero(std::size_t n) noexcept {
  if (n > 20) return 0;
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

template <std::size_t K>
using Sums = std::array<std::vector<double>, K>;

template <std::size_t K, typename ValueFn>
void accumulate_order(const std::vector<std::size_t>& order, ValueFn& value,
                      Sums<K>& sums) {
  Coalition s;
  std::array<double, K> prev = value(s);
  for (std::size_t agent : order) {
    s = s.with(agent);
    std::array<double, K> cur = value(s);
    for (std::size_t k = 0; k < K; ++k) sums[k][agent] += cur[k] - prev[k];
    prev = cur;
  }
}

template <std::size_t K, typename ValueFn>
void accumulate_reversed(const std::vector<std::size_t>& order,
                         ValueFn& value, Sums<K>& sums) {
  Coalition s;
  std::array<double, K> prev = value(s);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    s = s.with(*it);
    std::array<double, K> cur = value(s);
    for (std::size_t k = 0; k < K; ++k) sums[k][*it] += cur[k] - prev[k];
    prev = cur;
  }
}

}  // namespace detail

// Rescales an estimate so its shares sum to `total`. Multiplicative when the
// estimate has a nonzero sum (keeps zero shares at zero), additive otherwise.
inline void rescale_to_total(std::vector<double>& shares, double total) {
  double sum = 0.0;
  for (double x : shares) sum += x;
  if (sum == total || shares.empty()) return;
  if (sum != 0.0 && total != 0.0) {
    const double f = total / sum;
    for (double& x : shares) x *= f;
  } else {
    const double shift = (total - sum) / static_cast<double>(shares.size());
    for (double& x : shares) x += shift;
  }
}

// Permutation-sampling Shapley estimator for K games evaluated on the same
// orders. value(Coalition) must return std::array<double, K> and be safe to
// call concurrently.
//
// Orders are drawn in antithetic pairs (an order and its reverse), so
// `samples` is rounded up to an even count. The stream is split into
// fixed-size blocks seeded from (seed, block) and reduced in block order,
// which keeps the result independent of the thread count.
template <std::size_t K, typename ValueFn>
std::array<std::vector<double>, K> sample_shapley(
    std::size_t n, ValueFn value, const SamplerOptions& opts,
    SamplerStats* stats = nullptr) {
  static_assert(K >= 1);
  if (n == 0) throw error(errc::invalid_argument, "no agents");
  require_agent_count(n, kMaxAgents, "sample_shapley");
  if (opts.samples == 0) {
    throw error(errc::invalid_argument, "samples must be at least 1");
  }

  const std::size_t nfact = detail::factorial_or_zero(n);
  const bool exhaustive =
      opts.mode == SamplerMode::exhaustive ||
      (opts.mode == SamplerMode::automatic && nfact != 0 &&
       opts.samples >= nfact);
  if (opts.mode == SamplerMode::exhaustive && (nfact == 0 || n > 12)) {
    throw error(errc::too_many_agents,
                "exhaustive enumeration supports at most 12 agents");
  }

  detail::Sums<K> sums;
  for (auto& v : sums) v.assign(n, 0.0);
  std::size_t count = 0;

  if (exhaustive) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
      detail::accumulate_order<K>(order, value, sums);
      ++count;
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    constexpr std::size_t kPairsPerBlock = 512;
    const std::size_t pairs = (opts.samples + 1) / 2;
    const std::size_t blocks = (pairs + kPairsPerBlock - 1) / kPairsPerBlock;
    std::vector<detail::Sums<K>> partial(blocks);

    auto run_block = [&](std::size_t b) {
      detail::Sums<K> local, pair;
      for (auto& v : local) v.assign(n, 0.0);
      std::mt19937_64 rng(detail::splitmix64(
          opts.seed ^ detail::splitmix64(static_cast<std::uint64_t>(b))));
      std::vector<std::size_t> order(n);
      const std::size_t first = b * kPairsPerBlock;
      const std::size_t last = std::min(pairs, first + kPairsPerBlock);
      for (std::size_t p = first; p < last; ++p) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        detail::shuffle(order, rng);
        // Summing each antithetic pair on its own first makes the estimate
        // exactly symmetric for interchangeable agents when n = 2.
        for (auto& v : pair) v.assign(n, 0.0);
        detail::accumulate_order<K>(order, value, pair);
        detail::accumulate_reversed<K>(order, value, pair);
        for (std::size_t k = 0; k < K; ++k) {
          for (std::size_t i = 0; i < n; ++i) local[k][i] += pair[k][i];
        }
      }
      partial[b] = std::move(local);
    };

    unsigned threads = opts.threads != 0
                           ? opts.threads
                           : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, std::max<std::size_t>(blocks, 1)));
    if (threads <= 1) {
      for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t b = next++; b < blocks; b = next++) run_block(b);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (const auto& part : partial) {
      for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t i = 0; i < n; ++i) sums[k][i] += part[k][i];
      }
    }
    count = 2 * pairs;
  }

  const std::array<double, K> grand = value(Coalition::grand(n));
  std::array<std::vector<double>, K> out;
  for (std::size_t k = 0; k < K; ++k) {
    out[k].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[k][i] = sums[k][i] / static_cast<double>(count);
    }
    rescale_to_total(out[k], grand[k]);
  }
  if (stats != nullptr) {
    stats->exhaustive = exhaustive;
    stats->permutations = count;
  }
  return out;
}

}  // namespace ivinv

#endif  // IVINV_SHAPLEY_SAMPLER_HPP
