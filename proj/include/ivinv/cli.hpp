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

#ifndef IVINV_CLI_HPP
#define IVINV_CLI_HPP

#include <cstddef>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivinv/allocation.hpp"
#include "ivinv/error.hpp"
#include "ivinv/inventory.hpp"
#include "ivinv/properties.hpp"
#include "ivinv/report.hpp"
#include "ivinv/situation_io.hpp"

namespace ivinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitValidation = 2;

struct Environment {
  bool color = false;
  // Directory searched for bundled fixtures given by name ("example1").
  std::string data_dir;
};

namespace detail {

inline int exit_code_for(errc code) {
  switch (code) {
    case errc::schema_error:
    case errc::bounds_error:
    case errc::duplicate_id:
    case errc::invalid_situation:
    case errc::invalid_argument:
      return kExitParse;
    default:
      return kExitValidation;
  }
}

inline std::string resolve_input(const std::string& name,
                                 const Environment& env) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(name)) return name;
  if (!env.data_dir.empty()) {
    for (const auto& candidate :
         {fs::path(env.data_dir) / name, fs::path(env.data_dir) / (name + ".json")}) {
      if (fs::is_regular_file(candidate)) return candidate.string();
    }
  }
  throw error(errc::schema_error, name + ": no such file or bundled fixture");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::schema_error, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ParsedSituation load(const std::string& name, const Environment& env,
                            bool lenient, std::ostream& err) {
  const std::string path = resolve_input(name, env);
  std::string text = read_file(path);
  try {
    ParsedSituation p = parse_situation(text, ParseOptions{lenient});
    for (const auto& w : p.warnings) err << "warning: " << w << "\n";
    return p;
  } catch (const error& e) {
    throw error(e.code(), path + ": " + e.detail());
  }
}

inline OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return OutputFormat::csv;
  if (f == "json") return OutputFormat::json;
  return OutputFormat::table;
}

inline std::size_t factorial_capped(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (f > SIZE_MAX / k) return SIZE_MAX;
    f *= k;
  }
  return f;
}

struct ShapleyChoice {
  IntervalAllocation allocation;
  std::string note;
};

inline ShapleyChoice shapley_for(const IntervalInventorySituation& s,
                                 std::size_t samples, std::uint64_t seed) {
  if (samples == 0) return {interval_shapley(s), ""};
  if (factorial_capped(s.size()) <= samples) {
    return {interval_shapley(s),
            std::to_string(samples) + " samples cover all " +
                std::to_string(factorial_capped(s.size())) +
                " orders; computed exactly"};
  }
  return {interval_shapley_sampled(s, samples, seed, SamplerMode::monte_carlo),
          "sampled Shapley estimate: " + std::to_string(samples) +
              " permutations (rounded up to even), seed " +
              std::to_string(seed)};
}

inline void print_report(const PropertyReport& r, std::ostream& out) {
  out << to_string(r.property) << ": " << (r.holds ? "holds" : "FAILS");
  if (!r.witnesses.empty()) out << " (" << r.witnesses.size() << " witnesses)";
  out << "\n";
  for (const auto& w : r.witnesses) {
    out << "  " << w.where.to_string() << ": lhs [" << w.lhs.lo << ", "
        << w.lhs.hi << "] rhs [" << w.rhs.lo << ", " << w.rhs.hi << "]\n";
  }
  for (const auto& s : r.skipped) out << "  skipped " << s << "\n";
}

}  // namespace detail

inline int run_validate(const std::string& input, bool lenient, bool strict,
                        const Environment& env, std::ostream& out,
                        std::ostream& err) {
  const ParsedSituation p = detail::load(input, env, lenient, err);
  const auto& s = p.situation;
  out << "agents: " << s.size() << "\n";
  out << "ordering cost: " << s.ordering_cost() << "\n";
  out << "total cost w(N): "
      << ivinv::detail::fmt_interval(interval_game_value(s, s.agents().grand()), 2)
      << "\n";
  if (!s.all_inactive()) {
    const auto soc = validate_soc_condition(s);
    out << "soc condition: " << (soc.holds ? "holds" : "fails")
        << " (max agent ratio " << soc.max_agent_ratio() << " at "
        << s.agents().label(soc.worst_agent) << ", aggregate ratio "
        << soc.aggregate_ratio << ")\n";
  } else {
    out << "soc condition: holds (all agents inactive)\n";
  }
  out << "size-monotonic: " << (s.shapley_valid() ? "yes" : "no") << "\n";
  if (strict && (!s.soc_valid() || !s.shapley_valid())) return kExitValidation;
  return kExitOk;
}

inline int run_allocate(const std::string& input, const std::string& rule,
                        std::size_t samples, std::uint64_t seed,
                        const RenderOptions& ro, bool lenient,
                        const Environment& env, std::ostream& out,
                        std::ostream& err) {
  const ParsedSituation p = detail::load(input, env, lenient, err);
  const auto& s = p.situation;
  if (rule == "all") {
    auto sh = detail::shapley_for(s, samples, seed);
    ComparisonReport r = make_comparison_report(p, sh.allocation);
    if (!sh.note.empty()) {
      err << "notice: " << sh.note << "\n";
      r.notes.push_back(sh.note);
    }
    out << render(r, ro);
    return kExitOk;
  }
  AllocationReport r;
  if (rule == "individual") {
    r = make_allocation_report(rule, p, individual_costs(s));
  } else if (rule == "soc") {
    r = make_allocation_report(rule, p, interval_soc(s).shares);
  } else {
    auto sh = detail::shapley_for(s, samples, seed);
    r = make_allocation_report(rule, p, sh.allocation.shares);
    if (!sh.note.empty()) {
      err << "notice: " << sh.note << "\n";
      r.notes.push_back(sh.note);
    }
  }
  out << render(r, ro);
  return kExitOk;
}

inline int run_properties(const std::string& input, const std::string& rule,
                          const std::vector<std::string>& checks, bool lenient,
                          const Environment& env, std::ostream& out,
                          std::ostream& err) {
  const ParsedSituation p = detail::load(input, env, lenient, err);
  const auto& s = p.situation;
  auto apply = [&rule](const IntervalInventorySituation& x) {
    return rule == "soc" ? interval_soc(x) : interval_shapley(x);
  };
  bool all_hold = true;
  for (const auto& check : checks) {
    std::optional<PropertyReport> r;
    if (check == "cca") {
      r = check_cca(s, apply(s));
    } else if (check == "iae") {
      r = check_iae(apply, s);
    } else if (check == "tba") {
      // Self-split instance: each m_i^2 halved into two situations whose
      // combination reproduces the input.
      std::vector<Interval> half;
      for (const auto& m : s.frequencies()) {
        half.push_back(scale(1.0 / std::sqrt(2.0), m));
      }
      IntervalInventorySituation h(s.agents(), s.ordering_cost(), half);
      r = check_tba(apply, h, h);
    } else if (check == "bc") {
      if (s.size() < 2) {
        out << "BC: skipped (needs two agents)\n";
        continue;
      }
      r = check_bc(apply, s);
    } else if (check == "core") {
      r = interval_core_contains(materialize_game(s), apply(s));
    }
    out << "[" << rule << "] ";
    detail::print_report(*r, out);
    all_hold = all_hold && r->holds;
  }
  return all_hold ? kExitOk : kExitValidation;
}

inline int run_ingest(const std::string& input, const std::string& output,
                      bool lenient, std::ostream& out) {
  const std::string text = detail::read_file(input);
  const TrafficFile t = parse_traffic_file(text, ParseOptions{lenient});
  const std::string rendered = serialize_situation(ingest_traffic(t));
  if (output.empty() || output == "-") {
    out << rendered;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw error(errc::schema_error, output + ": cannot write");
    f << rendered;
  }
  return kExitOk;
}

// Entry point shared by the executable and the tests. args[0] is the program
// name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, const Environment& env = {}) {
  CLI::App app{"Cost allocation for interval EOQ inventory situations", "ivinv"};
  app.require_subcommand(1);
  bool lenient = false;
  app.add_flag("--lenient", lenient, "Accept unknown fields in input files");

  std::string input;
  auto* validate = app.add_subcommand("validate", "Parse and check a situation");
  validate->add_option("file", input, "Situation file or bundled fixture name")
      ->required();
  bool strict = false;
  validate->add_flag("--strict", strict,
                     "Exit 2 unless both rules are applicable");
  validate->add_flag("--lenient", lenient, "Accept unknown fields");

  auto* allocate = app.add_subcommand("allocate", "Compute interval shares");
  std::string rule;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string format = "table";
  int precision = 2;
  allocate->add_option("file", input, "Situation file or bundled fixture name")
      ->required();
  allocate->add_option("--rule", rule, "Allocation rule")
      ->required()
      ->check(CLI::IsMember({"individual", "soc", "shapley", "all"}));
  allocate->add_option("--samples", samples,
                       "Permutations for the sampled Shapley rule");
  allocate->add_option("--seed", seed, "Seed for the sampled Shapley rule");
  allocate->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  allocate->add_option("--precision", precision,
                       "Decimals for table and csv output")
      ->check(CLI::Range(0, 12));
  allocate->add_flag("--lenient", lenient, "Accept unknown fields");

  auto* properties = app.add_subcommand("properties", "Check rule axioms");
  std::string prop_rule;
  std::vector<std::string> checks{"cca", "iae", "tba", "bc", "core"};
  properties->add_option("file", input, "Situation file or bundled fixture name")
      ->required();
  properties->add_option("--rule", prop_rule, "Rule under test")
      ->required()
      ->check(CLI::IsMember({"soc", "shapley"}));
  properties->add_option("--checks", checks, "Comma-separated checks")
      ->delimiter(',')
      ->check(CLI::IsMember({"cca", "iae", "tba", "bc", "core"}));
  properties->add_flag("--lenient", lenient, "Accept unknown fields");

  auto* ingest = app.add_subcommand("ingest", "Derive a situation from traffic");
  std::string output;
  ingest->add_option("file", input, "Traffic file")->required();
  ingest->add_option("-o,--output", output, "Output situation file");
  ingest->add_flag("--lenient", lenient, "Accept unknown fields");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*validate) return run_validate(input, lenient, strict, env, out, err);
    if (*allocate) {
      RenderOptions ro{detail::parse_format(format), precision, env.color};
      return run_allocate(input, rule, samples, seed, ro, lenient, env, out,
                          err);
    }
    if (*properties) {
      return run_properties(input, prop_rule, checks, lenient, env, out, err);
    }
    if (*ingest) return run_ingest(input, output, lenient, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace ivinv::cli

#endif  // IVINV_CLI_HPP
