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

#ifndef IVINV_COALITION_HPP
#define IVINV_COALITION_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ivinv/error.hpp"

namespace ivinv {

// Largest agent count for operations that tabulate all 2^n coalitions.
inline constexpr std::size_t kMaxTabulatedAgents = 24;
// Largest agent count for the exhaustive checks (concavity, monotonicity,
// game materialization, coalition-wide property checks).
inline constexpr std::size_t kMaxCheckedAgents = 20;
// Hard cap of the bitmask representation.
inline constexpr std::size_t kMaxAgents = 64;

// Subset of {0, ..., n-1}; agent i is bit i. The empty coalition is 0.
class Coalition {
 public:
  using mask_type = std::uint64_t;

  constexpr Coalition() = default;
  explicit constexpr Coalition(mask_type bits) : bits_(bits) {}

  static constexpr Coalition grand(std::size_t n) noexcept {
    return Coalition(n >= 64 ? ~mask_type{0} : (mask_type{1} << n) - 1);
  }
  static constexpr Coalition singleton(std::size_t i) noexcept {
    return Coalition(mask_type{1} << i);
  }

  constexpr mask_type bits() const noexcept { return bits_; }
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(bits_);
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const noexcept {
    return (bits_ >> i) & 1U;
  }
  constexpr Coalition with(std::size_t i) const noexcept {
    return Coalition(bits_ | (mask_type{1} << i));
  }
  constexpr Coalition without(std::size_t i) const noexcept {
    return Coalition(bits_ & ~(mask_type{1} << i));
  }
  constexpr bool subset_of(Coalition other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  // Members in ascending order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (mask_type b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  // 1-based member list, e.g. "{1,3}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i : members()) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) noexcept {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) noexcept {
    return Coalition(a.bits_ & b.bits_);
  }
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  mask_type bits_ = 0;
};

// Calls fn(Coalition) for every subset of `mask`, ascending by index.
template <typename Fn>
void for_each_subset(Coalition mask, Fn&& fn) {
  using M = Coalition::mask_type;
  const M full = mask.bits();
  M sub = 0;
  while (true) {
    fn(Coalition(sub));
    if (sub == full) break;
    sub = (sub - full) & full;  // next subset in increasing order
  }
}

inline void require_agent_count(std::size_t n, std::size_t limit,
                                const char* what) {
  if (n > limit) {
    throw error(errc::too_many_agents,
                std::string(what) + " supports at most " +
                    std::to_string(limit) + " agents, got " +
                    std::to_string(n));
  }
}

// The player set N with display labels.
class AgentSet {
 public:
  AgentSet() = default;

  explicit AgentSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    if (labels_.empty()) {
      throw error(errc::invalid_argument, "agent set must be nonempty");
    }
    require_agent_count(labels_.size(), kMaxAgents, "AgentSet");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) {
        throw error(errc::duplicate_id, "agent label '" + l + "' repeated");
      }
    }
  }

  // Labels "1".."n".
  static AgentSet numbered(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    return AgentSet(std::move(labels));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Coalition grand() const noexcept { return Coalition::grand(size()); }

  // Drops agent i, keeping the order of the rest.
  AgentSet without(std::size_t i) const {
    std::vector<std::string> rest;
    for (std::size_t k = 0; k < labels_.size(); ++k) {
      if (k != i) rest.push_back(labels_[k]);
    }
    return AgentSet(std::move(rest));
  }

  friend bool operator==(const AgentSet&, const AgentSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace ivinv

#endif  // IVINV_COALITION_HPP
