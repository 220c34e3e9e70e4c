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

#ifndef IVINV_SITUATION_IO_HPP
#define IVINV_SITUATION_IO_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ivinv/coalition.hpp"
#include "ivinv/error.hpp"
#include "ivinv/interval.hpp"
#include "ivinv/inventory.hpp"

namespace ivinv {

inline constexpr int kSituationFileVersion = 1;

// Demand-based description of an agent (units/period, currency/unit/period).
struct DemandFields {
  double demand_lo = 0.0;
  double demand_hi = 0.0;
  double holding_cost = 0.0;

  friend bool operator==(const DemandFields&, const DemandFields&) = default;
};

struct FrequencyFields {
  double m_lo = 0.0;
  double m_hi = 0.0;

  friend bool operator==(const FrequencyFields&,
                         const FrequencyFields&) = default;
};

struct AgentRecord {
  std::string id;
  std::string name;
  std::optional<DemandFields> demand;
  std::optional<FrequencyFields> frequency;
  // Rounded reference frequencies kept for cross-checking only.
  std::optional<FrequencyFields> reference_frequency;

  friend bool operator==(const AgentRecord&, const AgentRecord&) = default;
};

struct SituationFile {
  int version = kSituationFileVersion;
  double ordering_cost = 0.0;
  std::string period_note;
  std::vector<AgentRecord> agents;

  friend bool operator==(const SituationFile&, const SituationFile&) = default;
};

struct ParseOptions {
  // Accept (and ignore) unknown fields.
  bool lenient = false;
};

struct ParsedSituation {
  SituationFile file;
  IntervalInventorySituation situation;
  std::vector<std::string> warnings;
};

namespace detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] inline void schema_fail(const std::string& path,
                                     const std::string& msg) {
  throw error(errc::schema_error, path + ": " + msg);
}

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
    if (auto pos = what.find("] "); pos != std::string::npos) {
      what = what.substr(pos + 2);
    }
    throw error(errc::schema_error, what);
  }
}

inline void reject_unknown(const json& obj, const std::string& path,
                           const std::set<std::string>& known,
                           const ParseOptions& opts) {
  if (opts.lenient) return;
  for (const auto& [key, _] : obj.items()) {
    if (!known.contains(key)) schema_fail(path + "." + key, "unknown field");
  }
}

inline const json& require_field(const json& obj, const std::string& path,
                                 const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing field");
  return *it;
}

inline double require_number(const json& obj, const std::string& path,
                             const std::string& key) {
  const json& v = require_field(obj, path, key);
  if (!v.is_number()) schema_fail(path + "." + key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) schema_fail(path + "." + key, "must be finite");
  return x;
}

inline std::string require_string(const json& obj, const std::string& path,
                                  const std::string& key) {
  const json& v = require_field(obj, path, key);
  if (!v.is_string()) schema_fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

inline std::optional<double> optional_number(const json& obj,
                                             const std::string& path,
                                             const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  return require_number(obj, path, key);
}

// Both or neither of a bound pair; lo <= hi.
inline std::optional<std::pair<double, double>> optional_bounds(
    const json& obj, const std::string& path, const std::string& lo_key,
    const std::string& hi_key, const std::string& agent_label) {
  const bool has_lo = obj.contains(lo_key);
  const bool has_hi = obj.contains(hi_key);
  if (!has_lo && !has_hi) return std::nullopt;
  if (has_lo != has_hi) {
    schema_fail(path + "." + (has_lo ? hi_key : lo_key),
                "missing field (" + lo_key + " and " + hi_key +
                    " go together)");
  }
  const double lo = require_number(obj, path, lo_key);
  const double hi = require_number(obj, path, hi_key);
  if (lo < 0.0) schema_fail(path + "." + lo_key, "must be nonnegative");
  if (lo > hi) {
    std::ostringstream os;
    os << path << "." << lo_key << ": agent '" << agent_label << "' has "
       << lo_key << " = " << lo << " > " << hi_key << " = " << hi;
    throw error(errc::bounds_error, os.str());
  }
  return std::make_pair(lo, hi);
}

inline bool relative_mismatch(double a, double b, double rel) {
  return std::abs(a - b) > rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace detail

inline SituationFile parse_situation_file(std::string_view text,
                                          const ParseOptions& opts = {}) {
  using detail::schema_fail;
  const auto root = detail::parse_json_text(text);
  if (!root.is_object()) schema_fail("$", "expected an object");
  detail::reject_unknown(root, "$",
                         {"version", "ordering_cost", "period_note", "agents"},
                         opts);

  SituationFile f;
  const auto& version = detail::require_field(root, "$", "version");
  if (!version.is_number_integer()) {
    schema_fail("$.version", "expected an integer");
  }
  f.version = version.get<int>();
  if (f.version != kSituationFileVersion) {
    schema_fail("$.version", "unsupported version " +
                                 std::to_string(f.version));
  }
  f.ordering_cost = detail::require_number(root, "$", "ordering_cost");
  if (!(f.ordering_cost > 0.0)) {
    schema_fail("$.ordering_cost", "must be positive");
  }
  if (root.contains("period_note")) {
    f.period_note = detail::require_string(root, "$", "period_note");
  }

  const auto& agents = detail::require_field(root, "$", "agents");
  if (!agents.is_array() || agents.empty()) {
    schema_fail("$.agents", "expected a nonempty array");
  }
  std::set<std::string> ids;
  for (std::size_t k = 0; k < agents.size(); ++k) {
    const std::string path = "$.agents[" + std::to_string(k) + "]";
    const auto& a = agents[k];
    if (!a.is_object()) schema_fail(path, "expected an object");
    detail::reject_unknown(
        a, path,
        {"id", "name", "demand_lo", "demand_hi", "holding_cost", "m_lo",
         "m_hi", "reference_m_lo", "reference_m_hi"},
        opts);
    AgentRecord rec;
    rec.id = detail::require_string(a, path, "id");
    if (rec.id.empty()) schema_fail(path + ".id", "must be nonempty");
    if (!ids.insert(rec.id).second) {
      throw error(errc::duplicate_id,
                  path + ".id: agent id '" + rec.id + "' repeated");
    }
    rec.name = a.contains("name") ? detail::require_string(a, path, "name")
                                  : rec.id;

    if (auto d = detail::optional_bounds(a, path, "demand_lo", "demand_hi",
                                         rec.id)) {
      const double h = detail::require_number(a, path, "holding_cost");
      if (!(h > 0.0)) schema_fail(path + ".holding_cost", "must be positive");
      rec.demand = DemandFields{d->first, d->second, h};
    } else if (a.contains("holding_cost")) {
      schema_fail(path + ".demand_lo",
                  "missing field (holding_cost given without demand)");
    }
    if (auto m = detail::optional_bounds(a, path, "m_lo", "m_hi", rec.id)) {
      rec.frequency = FrequencyFields{m->first, m->second};
    }
    if (auto m = detail::optional_bounds(a, path, "reference_m_lo",
                                         "reference_m_hi", rec.id)) {
      rec.reference_frequency = FrequencyFields{m->first, m->second};
    }
    if (!rec.demand && !rec.frequency) {
      schema_fail(path, "needs demand_lo/demand_hi/holding_cost or m_lo/m_hi");
    }
    f.agents.push_back(std::move(rec));
  }
  return f;
}

// Builds the situation. Supplied m wins over demand-derived m; disagreement
// beyond 1e-6 relative and reference values off by more than 0.01 produce
// warnings, as do failed applicability flags.
inline ParsedSituation build_situation(SituationFile file) {
  std::vector<std::string> labels;
  std::vector<Interval> m;
  std::vector<std::string> warnings;
  for (const auto& rec : file.agents) {
    labels.push_back(rec.id);
    std::optional<Interval> derived;
    if (rec.demand) {
      const DeterministicAgent lo{rec.demand->demand_lo,
                                  rec.demand->holding_cost};
      const DeterministicAgent hi{rec.demand->demand_hi,
                                  rec.demand->holding_cost};
      derived = Interval(eoq_frequency(lo, file.ordering_cost),
                         eoq_frequency(hi, file.ordering_cost));
    }
    Interval used = derived.value_or(Interval(0.0));
    if (rec.frequency) {
      used = Interval(rec.frequency->m_lo, rec.frequency->m_hi);
      if (derived && (detail::relative_mismatch(used.lo, derived->lo, 1e-6) ||
                      detail::relative_mismatch(used.hi, derived->hi, 1e-6))) {
        std::ostringstream os;
        os << "agent " << rec.id << ": supplied m " << used
           << " differs from demand-derived m " << *derived
           << "; using supplied m";
        warnings.push_back(os.str());
      }
    }
    if (rec.reference_frequency) {
      const auto& ref = *rec.reference_frequency;
      if (std::abs(ref.m_lo - used.lo) > 0.01 ||
          std::abs(ref.m_hi - used.hi) > 0.01) {
        std::ostringstream os;
        os << "agent " << rec.id << ": reference m [" << ref.m_lo << ", "
           << ref.m_hi << "] differs from m " << used << " by more than 0.01";
        warnings.push_back(os.str());
      }
    }
    m.push_back(used);
  }
  IntervalInventorySituation s(AgentSet(std::move(labels)), file.ordering_cost,
                               std::move(m));
  if (!s.soc_valid()) {
    warnings.push_back("SOC condition fails: the interval SOC-rule is undefined");
  }
  if (!s.shapley_valid()) {
    warnings.push_back(
        s.size() > kMaxCheckedAgents
            ? "too many agents to verify size-monotonicity"
            : "length game not monotone: the interval Shapley rule is "
              "undefined");
  }
  return ParsedSituation{std::move(file), std::move(s), std::move(warnings)};
}

inline ParsedSituation parse_situation(std::string_view text,
                                       const ParseOptions& opts = {}) {
  return build_situation(parse_situation_file(text, opts));
}

// Canonical rendering: fixed field order, two-space indent.
inline std::string serialize_situation(const SituationFile& f) {
  detail::ordered_json root;
  root["version"] = f.version;
  root["ordering_cost"] = f.ordering_cost;
  root["period_note"] = f.period_note;
  auto agents = detail::ordered_json::array();
  for (const auto& a : f.agents) {
    detail::ordered_json o;
    o["id"] = a.id;
    o["name"] = a.name;
    if (a.demand) {
      o["demand_lo"] = a.demand->demand_lo;
      o["demand_hi"] = a.demand->demand_hi;
      o["holding_cost"] = a.demand->holding_cost;
    }
    if (a.frequency) {
      o["m_lo"] = a.frequency->m_lo;
      o["m_hi"] = a.frequency->m_hi;
    }
    if (a.reference_frequency) {
      o["reference_m_lo"] = a.reference_frequency->m_lo;
      o["reference_m_hi"] = a.reference_frequency->m_hi;
    }
    agents.push_back(std::move(o));
  }
  root["agents"] = std::move(agents);
  return root.dump(2) + "\n";
}

// Raw annual traffic from which monthly demand intervals are derived.
struct TrafficAirport {
  std::string id;
  std::string name;
  std::uint64_t annual_passengers = 0;

  friend bool operator==(const TrafficAirport&,
                         const TrafficAirport&) = default;
};

struct TrafficFile {
  double purchase_rate = 0.05;
  double seasonal_variation = 0.3;
  std::map<std::string, double> unit_holding_costs;
  double ordering_cost = 0.0;
  std::vector<TrafficAirport> airports;

  friend bool operator==(const TrafficFile&, const TrafficFile&) = default;
};

inline TrafficFile parse_traffic_file(std::string_view text,
                                      const ParseOptions& opts = {}) {
  using detail::schema_fail;
  const auto root = detail::parse_json_text(text);
  if (!root.is_object()) schema_fail("$", "expected an object");
  detail::reject_unknown(root, "$",
                         {"purchase_rate", "seasonal_variation",
                          "unit_holding_costs", "ordering_cost", "airports"},
                         opts);
  TrafficFile t;
  t.purchase_rate = detail::require_number(root, "$", "purchase_rate");
  if (!(t.purchase_rate > 0.0 && t.purchase_rate <= 1.0)) {
    schema_fail("$.purchase_rate", "must lie in (0, 1]");
  }
  t.seasonal_variation = detail::require_number(root, "$", "seasonal_variation");
  if (!(t.seasonal_variation >= 0.0 && t.seasonal_variation < 1.0)) {
    schema_fail("$.seasonal_variation", "must lie in [0, 1)");
  }
  t.ordering_cost = detail::require_number(root, "$", "ordering_cost");
  if (!(t.ordering_cost > 0.0)) {
    schema_fail("$.ordering_cost", "must be positive");
  }
  const auto& costs = detail::require_field(root, "$", "unit_holding_costs");
  if (!costs.is_object()) {
    schema_fail("$.unit_holding_costs", "expected an object");
  }
  for (const auto& [id, v] : costs.items()) {
    const std::string path = "$.unit_holding_costs." + id;
    if (!v.is_number() || !(v.get<double>() > 0.0)) {
      schema_fail(path, "expected a positive number");
    }
    t.unit_holding_costs[id] = v.get<double>();
  }
  const auto& airports = detail::require_field(root, "$", "airports");
  if (!airports.is_array() || airports.empty()) {
    schema_fail("$.airports", "expected a nonempty array");
  }
  std::set<std::string> ids;
  for (std::size_t k = 0; k < airports.size(); ++k) {
    const std::string path = "$.airports[" + std::to_string(k) + "]";
    const auto& a = airports[k];
    if (!a.is_object()) schema_fail(path, "expected an object");
    detail::reject_unknown(a, path, {"id", "name", "annual_passengers"}, opts);
    TrafficAirport ap;
    ap.id = detail::require_string(a, path, "id");
    if (!ids.insert(ap.id).second) {
      throw error(errc::duplicate_id,
                  path + ".id: airport id '" + ap.id + "' repeated");
    }
    ap.name = a.contains("name") ? detail::require_string(a, path, "name")
                                 : ap.id;
    const auto& pax = detail::require_field(a, path, "annual_passengers");
    if (!pax.is_number_unsigned() && !(pax.is_number_integer() &&
                                       pax.get<std::int64_t>() >= 0)) {
      schema_fail(path + ".annual_passengers",
                  "expected a nonnegative integer");
    }
    ap.annual_passengers = pax.get<std::uint64_t>();
    if (!t.unit_holding_costs.contains(ap.id)) {
      schema_fail("$.unit_holding_costs." + ap.id, "missing field");
    }
    t.airports.push_back(std::move(ap));
  }
  return t;
}

inline double round_to_hundred(double x) { return std::round(x / 100.0) * 100.0; }

// Monthly demand: mid = annual_passengers * purchase_rate / 12 and
// d = [mid (1 - v), mid (1 + v)], both rounded to the nearest hundred units.
inline SituationFile ingest_traffic(const TrafficFile& t) {
  SituationFile f;
  f.ordering_cost = t.ordering_cost;
  std::ostringstream note;
  note << "monthly demand from annual passengers x " << t.purchase_rate
       << " / 12, +/-" << t.seasonal_variation * 100.0
       << "% seasonal variation, rounded to 100 units; holding cost per unit "
          "as supplied";
  f.period_note = note.str();
  for (const auto& ap : t.airports) {
    const double mid =
        static_cast<double>(ap.annual_passengers) * t.purchase_rate / 12.0;
    AgentRecord rec;
    rec.id = ap.id;
    rec.name = ap.name;
    rec.demand = DemandFields{round_to_hundred(mid * (1.0 - t.seasonal_variation)),
                              round_to_hundred(mid * (1.0 + t.seasonal_variation)),
                              t.unit_holding_costs.at(ap.id)};
    f.agents.push_back(std::move(rec));
  }
  return f;
}

}  // namespace ivinv

#endif  // IVINV_SITUATION_IO_HPP
