#pragma once

#include "config.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bverify::cli {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr const char *kReportSchema = "bverify-report/1";

struct RunOptions {
  std::vector<std::string> suites;  ///< restrict to these configured suite ids
  std::optional<std::size_t> max_len;  ///< overrides the per-argument bound
  bool timing = false;  ///< adds wall-clock timings (breaks byte-identity)
};

struct RunOutcome {
  nlohmann::ordered_json report;
  int exit_code = 0;
};

/// Runs prechecks and suites of a validated config. Exit code 0 when every
/// assert-mode suite holds, 1 otherwise. Throws ValidationError for a
/// --suite selection that matches nothing in the config.
RunOutcome run_config(const Config &config, const RunOptions &options = {});

nlohmann::ordered_json render_verdict(const AlgebraSpec &spec, const Verdict &verdict);
nlohmann::ordered_json render_precheck(const AlgebraSpec &spec, const PrecheckReport &report);
nlohmann::ordered_json render_chi_validation(const ChiValidation &v);

/// Pretty-printed report with a trailing newline.
std::string report_text(const nlohmann::ordered_json &report);

} // namespace bverify::cli
