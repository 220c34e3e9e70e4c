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

#ifndef IVINV_ERROR_HPP
#define IVINV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivinv {

enum class errc {
  negative_scalar,
  width_violation,
  negative_operand,
  zero_denominator,
  order_violation,
  too_many_agents,
  invalid_game,
  invalid_situation,
  all_zero_frequencies,
  soc_condition_violated,
  not_size_monotonic,
  combined_situation_invalid,
  sub_situation_invalid,
  all_agents_inactive,
  invalid_argument,
  schema_error,
  bounds_error,
  duplicate_id,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::negative_scalar: return "NegativeScalar";
    case errc::width_violation: return "WidthViolation";
    case errc::negative_operand: return "NegativeOperand";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::order_violation: return "OrderViolation";
    case errc::too_many_agents: return "TooManyAgents";
    case errc::invalid_game: return "InvalidGame";
    case errc::invalid_situation: return "InvalidSituation";
    case errc::all_zero_frequencies: return "AllZeroFrequencies";
    case errc::soc_condition_violated: return "SocConditionViolated";
    case errc::not_size_monotonic: return "NotSizeMonotonic";
    case errc::combined_situation_invalid: return "CombinedSituationInvalid";
    case errc::sub_situation_invalid: return "SubSituationInvalid";
    case errc::all_agents_inactive: return "AllAgentsInactive";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::schema_error: return "SchemaError";
    case errc::bounds_error: return "BoundsError";
    case errc::duplicate_id: return "DuplicateId";
  }
  return "Unknown";
}

// Single exception type for every model violation; callers branch on code().
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  errc code() const noexcept { return code_; }
  // The message without the code name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  errc code_;
  std::string detail_;
};

// True for errors that mean "this rule is not defined on this input" as
// opposed to malformed data or programming errors.
constexpr bool is_precondition_failure(errc code) noexcept {
  switch (code) {
    case errc::soc_condition_violated:
    case errc::not_size_monotonic:
    case errc::all_agents_inactive:
    case errc::order_violation:
    case errc::zero_denominator:
    case errc::width_violation:
    case errc::all_zero_frequencies:
      return true;
    default:
      return false;
  }
}

}  // namespace ivinv

#endif  // IVINV_ERROR_HPP
