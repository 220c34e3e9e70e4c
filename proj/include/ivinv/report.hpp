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

#ifndef IVINV_REPORT_HPP
#define IVINV_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ivinv/allocation.hpp"
#include "ivinv/interval.hpp"
#include "ivinv/inventory.hpp"
#include "ivinv/properties.hpp"
#include "ivinv/situation_io.hpp"

namespace ivinv {

enum class OutputFormat { table, csv, json };

struct RenderOptions {
  OutputFormat format = OutputFormat::table;
  int precision = 2;
  bool color = false;
};

struct AllocationRow {
  std::string id;
  std::string name;
  Interval share;
};

// Output of a single rule (or of the individual-cost baseline).
struct AllocationReport {
  std::string rule;
  std::vector<AllocationRow> rows;
  Interval total;
  std::vector<std::string> notes;
};

struct ComparisonRow {
  std::string id;
  std::string name;
  Interval individual;
  Interval soc;
  Interval shapley;
  Interval proportional;  // w(N)-proportional-to-m split, for reference

  double l_ic() const { return length(individual); }
  double l_soc() const { return length(soc); }
  double l_sh() const { return length(shapley); }
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  Interval total_individual;
  Interval total_soc;
  Interval total_shapley;
  Interval grand_cost;
  bool soc_valid = false;
  bool shapley_valid = false;
  std::vector<std::pair<std::string, PropertyReport>> properties;
  std::vector<std::string> notes;
};

inline AllocationReport make_allocation_report(
    std::string rule, const ParsedSituation& p,
    const std::vector<Interval>& shares) {
  AllocationReport r;
  r.rule = std::move(rule);
  r.total = Interval(0.0);
  for (std::size_t i = 0; i < shares.size(); ++i) {
    r.rows.push_back({p.file.agents[i].id, p.file.agents[i].name, shares[i]});
    r.total += shares[i];
  }
  return r;
}

// Individual costs vs. SOC-rule vs. Shapley rule with interval lengths.
// `shapley` is passed in so callers can choose exact or sampled values.
inline ComparisonReport make_comparison_report(
    const ParsedSituation& p, const IntervalAllocation& shapley) {
  const auto& s = p.situation;
  const auto ic = individual_costs(s);
  const auto soc = interval_soc(s);
  const auto prop = proportional_frequency_split(s);
  ComparisonReport r;
  r.total_individual = Interval(0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    r.rows.push_back({p.file.agents[i].id, p.file.agents[i].name, ic[i],
                      soc[i], shapley[i], prop[i]});
    r.total_individual += ic[i];
  }
  r.total_soc = soc.total();
  r.total_shapley = shapley.total();
  r.grand_cost = interval_game_value(s, s.agents().grand());
  r.soc_valid = s.soc_valid();
  r.shapley_valid = s.shapley_valid();
  r.properties.emplace_back("soc", check_cca(s, soc));
  r.properties.emplace_back("shapley", check_cca(s, shapley));
  r.properties.emplace_back("soc", check_efficiency(s, soc));
  r.properties.emplace_back("shapley", check_efficiency(s, shapley));
  return r;
}

namespace detail {

inline std::string fixed(double x, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << x;
  return os.str();
}

inline std::string fmt_interval(const Interval& x, int precision) {
  return "[" + fixed(x.lo, precision) + ", " + fixed(x.hi, precision) + "]";
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Left-aligned first columns, right-aligned numeric columns.
inline std::string render_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows,
                                std::size_t text_columns, bool color) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::ostringstream os;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) os << "  ";
      if (c < text_columns) {
        os << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
      } else {
        os << std::right << std::setw(static_cast<int>(width[c])) << cells[c];
      }
    }
    std::string s = os.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::ostringstream out;
  out << (color ? "\x1b[1m" : "") << line(header) << (color ? "\x1b[0m" : "")
      << "\n";
  for (const auto& row : rows) out << line(row) << "\n";
  return out.str();
}

inline nlohmann::ordered_json to_json(const Interval& x) {
  nlohmann::ordered_json j;
  j["lo"] = x.lo;
  j["hi"] = x.hi;
  j["length"] = length(x);
  return j;
}

inline nlohmann::ordered_json to_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["property"] = std::string(to_string(r.property));
  j["holds"] = r.holds;
  j["tolerance"] = r.tolerance;
  auto w = nlohmann::ordered_json::array();
  for (const auto& x : r.witnesses) {
    nlohmann::ordered_json e;
    e["where"] = x.where.to_string();
    e["lhs"] = {x.lhs.lo, x.lhs.hi};
    e["rhs"] = {x.rhs.lo, x.rhs.hi};
    w.push_back(std::move(e));
  }
  j["witnesses"] = std::move(w);
  j["skipped"] = r.skipped;
  return j;
}

}  // namespace detail

inline std::string render(const AllocationReport& r, const RenderOptions& o) {
  const int p = o.precision;
  switch (o.format) {
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "agent,name,lo,hi,length\n";
      for (const auto& row : r.rows) {
        os << detail::csv_field(row.id) << ',' << detail::csv_field(row.name)
           << ',' << detail::fixed(row.share.lo, p) << ','
           << detail::fixed(row.share.hi, p) << ','
           << detail::fixed(length(row.share), p) << "\n";
      }
      os << "total,," << detail::fixed(r.total.lo, p) << ','
         << detail::fixed(r.total.hi, p) << ','
         << detail::fixed(length(r.total), p) << "\n";
      return os.str();
    }
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["rule"] = r.rule;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : r.rows) {
        nlohmann::ordered_json e;
        e["agent"] = row.id;
        e["name"] = row.name;
        e["share"] = detail::to_json(row.share);
        rows.push_back(std::move(e));
      }
      j["rows"] = std::move(rows);
      j["total"] = detail::to_json(r.total);
      j["notes"] = r.notes;
      return j.dump(2) + "\n";
    }
    case OutputFormat::table:
      break;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.rows) {
    rows.push_back({row.id, row.name, detail::fixed(row.share.lo, p),
                    detail::fixed(row.share.hi, p),
                    detail::fixed(length(row.share), p)});
  }
  rows.push_back({"total", "", detail::fixed(r.total.lo, p),
                  detail::fixed(r.total.hi, p),
                  detail::fixed(length(r.total), p)});
  std::string out = "rule: " + r.rule + "\n";
  out += detail::render_table({"agent", "name", "lo", "hi", "length"}, rows, 2,
                              o.color);
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

inline std::string render(const ComparisonReport& r, const RenderOptions& o) {
  const int p = o.precision;
  switch (o.format) {
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "agent,ic_lo,ic_hi,soc_lo,soc_hi,sh_lo,sh_hi,L_IC,L_SOC,L_Sh\n";
      auto line = [&](const std::string& id, const Interval& ic,
                      const Interval& soc, const Interval& sh) {
        os << detail::csv_field(id);
        for (double x : {ic.lo, ic.hi, soc.lo, soc.hi, sh.lo, sh.hi,
                         length(ic), length(soc), length(sh)}) {
          os << ',' << detail::fixed(x, p);
        }
        os << "\n";
      };
      for (const auto& row : r.rows) {
        line(row.id, row.individual, row.soc, row.shapley);
      }
      line("total", r.total_individual, r.total_soc, r.total_shapley);
      return os.str();
    }
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : r.rows) {
        nlohmann::ordered_json e;
        e["agent"] = row.id;
        e["name"] = row.name;
        e["individual"] = detail::to_json(row.individual);
        e["soc"] = detail::to_json(row.soc);
        e["shapley"] = detail::to_json(row.shapley);
        e["proportional_split"] = detail::to_json(row.proportional);
        rows.push_back(std::move(e));
      }
      j["rows"] = std::move(rows);
      j["totals"] = {{"individual", detail::to_json(r.total_individual)},
                     {"soc", detail::to_json(r.total_soc)},
                     {"shapley", detail::to_json(r.total_shapley)},
                     {"grand_cost", detail::to_json(r.grand_cost)}};
      j["soc_valid"] = r.soc_valid;
      j["shapley_valid"] = r.shapley_valid;
      auto props = nlohmann::ordered_json::array();
      for (const auto& [rule, rep] : r.properties) {
        auto e = detail::to_json(rep);
        e["rule"] = rule;
        props.push_back(std::move(e));
      }
      j["properties"] = std::move(props);
      j["notes"] = r.notes;
      return j.dump(2) + "\n";
    }
    case OutputFormat::table:
      break;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r.rows) {
    rows.push_back({row.id, row.name, detail::fmt_interval(row.individual, p),
                    detail::fmt_interval(row.soc, p),
                    detail::fmt_interval(row.shapley, p),
                    detail::fixed(row.l_ic(), p), detail::fixed(row.l_soc(), p),
                    detail::fixed(row.l_sh(), p)});
  }
  rows.push_back({"total", "", detail::fmt_interval(r.total_individual, p),
                  detail::fmt_interval(r.total_soc, p),
                  detail::fmt_interval(r.total_shapley, p),
                  detail::fixed(length(r.total_individual), p),
                  detail::fixed(length(r.total_soc), p),
                  detail::fixed(length(r.total_shapley), p)});
  std::string out = detail::render_table(
      {"agent", "name", "individual", "soc", "shapley", "L_IC", "L_SOC",
       "L_Sh"},
      rows, 2, o.color);

  std::vector<std::vector<std::string>> prop_rows;
  for (const auto& row : r.rows) {
    prop_rows.push_back({row.id, row.name,
                         detail::fmt_interval(row.proportional, p),
                         detail::fixed(length(row.proportional), p)});
  }
  out += "\nw(N) split in proportion to m (reference, not a rule):\n";
  out += detail::render_table({"agent", "name", "share", "length"}, prop_rows,
                              2, o.color);
  out += "\nsoc condition: " + std::string(r.soc_valid ? "holds" : "fails") +
         "; size-monotonic: " + (r.shapley_valid ? "yes" : "no") + "\n";
  for (const auto& [rule, rep] : r.properties) {
    out += std::string(to_string(rep.property)) + "(" + rule + "): " +
           (rep.holds ? "holds" : "FAILS") + "\n";
  }
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace ivinv

#endif  // IVINV_REPORT_HPP
