#include "report.hpp"

#include "bverify/errors.hpp"

#include <algorithm>
#include <chrono>

namespace bverify::cli {

using nlohmann::ordered_json;

namespace {

ordered_json render_tuple(const AlgebraSpec &spec, const std::vector<Monomial> &tuple) {
  ordered_json out = ordered_json::array();
  for (const auto &m : tuple)
    out.push_back(spec.render(m));
  return out;
}

ordered_json render_fact(const AlgebraSpec &spec, const PrecheckFact &f) {
  ordered_json out;
  out["holds"] = f.holds;
  out["cases_checked"] = f.cases_checked;
  if (f.witness) {
    out["witness"] = render_tuple(spec, *f.witness);
    out["value"] = f.witness_value.str(spec);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

ordered_json render_bounds(const Bounds &b) {
  ordered_json out;
  out["per_arg"] = b.per_arg;
  out["total"] = b.total;
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

} // namespace

ordered_json render_verdict(const AlgebraSpec &spec, const Verdict &v) {
  ordered_json out;
  out["suite"] = to_string(v.suite);
  out["map"] = v.map.empty() ? ordered_json(nullptr) : ordered_json(v.map);
  out["mode"] = to_string(v.mode);
  out["bounds"] = render_bounds(v.bounds);
  out["status"] = to_string(v.status);
  if (v.status == Status::skipped)
    out["reason"] = v.reason;
  out["cases_checked"] = v.cases_checked;
  ordered_json failures = ordered_json::array();
  for (const auto &f : v.failures) {
    ordered_json fj;
    fj["inputs"] = render_tuple(spec, f.inputs);
    fj["lhs"] = f.lhs.str(spec);
    fj["rhs"] = f.rhs.str(spec);
    failures.push_back(std::move(fj));
  }
  out["failures"] = std::move(failures);
  return out;
}

ordered_json render_precheck(const AlgebraSpec &spec, const PrecheckReport &r) {
  ordered_json out;
  out["map"] = r.map;
  out["all_hold"] = r.all_hold();
  out["d_of_one"] = render_fact(spec, r.d_of_one);
  out["d_squared"] = render_fact(spec, r.d_squared);
  out["omega3_zero"] = render_fact(spec, r.omega3_zero);
  return out;
}

ordered_json render_chi_validation(const ChiValidation &v) {
  ordered_json out;
  out["valid"] = v.valid;
  ordered_json violations = ordered_json::array();
  for (const auto &x : v.violations) {
    ordered_json vj;
    vj["row"] = x.row;
    vj["col"] = x.col;
    vj["order"] = x.order;
    vj["power"] = x.power.str();
    violations.push_back(std::move(vj));
  }
  out["violations"] = std::move(violations);
  return out;
}

RunOutcome run_config(const Config &config, const RunOptions &options) {
  Instance inst = build_instance(config);
  const AlgebraSpec &spec = *inst.spec;

  std::vector<SuiteDecl> selected;
  for (const auto &s : config.suites)
    if (options.suites.empty() ||
        std::find(options.suites.begin(), options.suites.end(), s.id) != options.suites.end())
      selected.push_back(s);
  for (const auto &id : options.suites)
    if (std::none_of(config.suites.begin(), config.suites.end(),
                     [&](const SuiteDecl &s) { return s.id == id; }))
      throw ValidationError("--suite " + id + ": no such suite in the config");

  RunOutcome outcome;
  ordered_json &report = outcome.report;
  report["schema"] = kReportSchema;
  report["tool"] = "bverify";
  report["version"] = kToolVersion;
  report["config_digest"] = config_digest(config);
  report["instance"] = config.name;
  report["domain"] = config.domain.describe();
  report["group"] = config.group.str();
  report["b_commutative"] = is_b_commutative(spec);
  report["chi_validation"] = render_chi_validation(chi_validate(spec.chi()));

  ordered_json timing;
  ordered_json prechecks = ordered_json::array();
  for (const auto &p : config.prechecks) {
    auto start = std::chrono::steady_clock::now();
    prechecks.push_back(render_precheck(spec, precheck_special_map(inst, p.map, p.bounds)));
    timing["prechecks_ms"].push_back(elapsed_ms(start));
  }
  report["prechecks"] = std::move(prechecks);

  ordered_json suites = ordered_json::array();
  for (const auto &s : selected) {
    SuiteRequest req;
    req.suite = *suite_from_string(s.id);
    req.map = s.map;
    req.mode = s.mode == "assert" ? Mode::assert_holds : Mode::report;
    req.bounds = s.bounds;
    if (options.max_len)
      req.bounds.per_arg = *options.max_len;
    auto start = std::chrono::steady_clock::now();
    Verdict v = run_suite(inst, req);
    timing["suites_ms"].push_back(elapsed_ms(start));
    if (req.mode == Mode::assert_holds && v.status != Status::holds)
      outcome.exit_code = 1;
    suites.push_back(render_verdict(spec, v));
  }
  report["suites"] = std::move(suites);
  if (options.timing)
    report["timing"] = std::move(timing);
  ordered_json summary;
  summary["exit_code"] = outcome.exit_code;
  report["summary"] = std::move(summary);
  return outcome;
}

std::string report_text(const ordered_json &report) { return report.dump(2) + "\n"; }

} // namespace bverify::cli
