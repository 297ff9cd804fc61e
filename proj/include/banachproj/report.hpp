#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "banachproj/harness.hpp"

namespace banachproj {

nlohmann::json to_json(const SuiteConfig& config);
/// Keys absent from `j` keep the values already in `base`.
SuiteConfig config_from_json(const nlohmann::json& j, SuiteConfig base = {});

nlohmann::json to_json(const BoundOutcome& outcome);
BoundOutcome outcome_from_json(const nlohmann::json& j);

/// Timing fields (runtime_seconds, per-trial wall_time) are written only when
/// include_timing is set, so two untimed reports of one config compare equal.
nlohmann::json to_json(const BoundReport& report, bool include_timing = true);
BoundReport report_from_json(const nlohmann::json& j);

/// One row per trial: trial, group, p, dim, status, lhs, rhs, margin,
/// informative, then every constant name seen in the report (sorted).
void write_csv(std::ostream& out, const BoundReport& report);

}  // namespace banachproj
