#include "cli.hpp"

#include "config.hpp"
#include "report.hpp"

#include "bverify/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace bverify::cli {

namespace {

std::vector<std::string> split(const std::string &text, const std::string &seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string &s, const std::string &what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (s.empty() || used != s.size())
    throw ValidationError(what + ": '" + s + "' is not an integer");
  return v;
}

std::string render_matrix(const Bicharacter &chi) {
  std::string s = "[";
  for (std::size_t i = 0; i < chi.matrix().size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < chi.matrix()[i].size(); ++j)
      s += (j ? ", " : "") + chi.matrix()[i][j].str();
    s += "]";
  }
  return s + "]";
}

int cmd_validate(const std::string &path, std::ostream &out) {
  Config c = parse_config(path);
  Instance inst = build_instance(c);
  out << "valid: " << c.name << "\n"
      << "domain: " << c.domain.describe() << "\n"
      << "group: " << c.group.str() << "\n"
      << "generators: " << c.generators.size() << "\n"
      << "derivations: " << c.derivations.size() << "\n"
      << "maps: " << c.maps.size() << "\n"
      << "suites: " << c.suites.size() << "\n"
      << "b_commutative: " << (is_b_commutative(*inst.spec) ? "true" : "false") << "\n"
      << "config_digest: " << config_digest(c) << "\n";
  return kExitOk;
}

int cmd_run(const std::string &path, const RunOptions &options,
            const std::string &out_path, std::ostream &out) {
  Config c = parse_config(path);
  RunOutcome r = run_config(c, options);
  std::string text = report_text(r.report);
  std::string target = !out_path.empty() ? out_path : c.output.value_or("");
  if (target.empty() || target == "-") {
    out << text;
  } else {
    std::ofstream file(target, std::ios::binary);
    if (!file)
      throw ValidationError("cannot write report to '" + target + "'");
    file << text;
    for (const auto &s : r.report["suites"])
      out << s["suite"].get<std::string>()
          << (s["map"].is_null() ? "" : "[" + s["map"].get<std::string>() + "]") << ": "
          << s["status"].get<std::string>() << "\n";
    out << "report: " << target << "\n";
  }
  return r.exit_code;
}

int cmd_search(const std::string &group_text, const std::string &predicate_text,
               const std::string &e_text, std::size_t max_candidates, std::ostream &out) {
  GroupSpec group = parse_group_flag(group_text);
  SearchPredicate predicate = parse_predicate_flag(predicate_text, group, e_text);
  SearchBounds bounds;
  bounds.max_candidates = max_candidates;
  auto results = bicharacter_search(group, predicate, bounds);
  out << render_search_table(group, predicate, results);
  return kExitOk;
}

} // namespace

GroupSpec parse_group_flag(const std::string &text) {
  std::vector<long> torsion;
  for (const auto &part : split(text, "x,")) {
    if (part.size() < 2 || part[0] != 'Z')
      throw ValidationError("--group: '" + part + "' is not a cyclic factor Zn");
    long n = parse_long(part.substr(1), "--group");
    if (n < 2)
      throw ValidationError("--group: order of '" + part + "' must be at least 2");
    torsion.push_back(n);
  }
  return GroupSpec(0, std::move(torsion));
}

SearchPredicate parse_predicate_flag(const std::string &text, const GroupSpec &group,
                                     const std::string &e) {
  SearchPredicate p;
  if (text == "symmetric") {
    p.kind = SearchPredicate::Kind::symmetric;
  } else if (text == "nonsymmetric") {
    p.kind = SearchPredicate::Kind::nonsymmetric;
  } else if (text == "chi_ee=-1") {
    p.kind = SearchPredicate::Kind::chi_ee_eq_minus_one;
    if (e.empty())
      throw ValidationError("--predicate chi_ee=-1 requires --e");
    std::vector<long> coords;
    for (const auto &c : split(e, ","))
      coords.push_back(parse_long(c, "--e"));
    if (coords.size() != group.dimension())
      throw ValidationError("--e: expected " + std::to_string(group.dimension()) +
                            " coordinates");
    p.e = group.make(std::move(coords));
  } else {
    throw ValidationError("--predicate: unknown predicate '" + text + "'");
  }
  return p;
}

std::string render_search_table(const GroupSpec &group, const SearchPredicate &predicate,
                                const std::vector<Bicharacter> &results) {
  std::ostringstream s;
  s << "# group " << group.str() << ", predicate " << predicate.str() << ", domain "
    << root_of_unity_domain(group).describe() << "\n";
  for (std::size_t i = 0; i < results.size(); ++i)
    s << i + 1 << "\t" << render_matrix(results[i]) << "\n";
  s << "# matches: " << results.size() << "\n";
  return s.str();
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact verification of braided graded algebra identities", "bverify"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string config_path;
  auto *validate = app.add_subcommand("validate", "Parse and validate a config");
  validate->add_option("config", config_path, "Config JSON file")->required();

  RunOptions run_options;
  std::size_t max_len = 0;
  std::string out_path;
  auto *run = app.add_subcommand("run", "Run prechecks and suites of a config");
  run->add_option("config", config_path, "Config JSON file")->required();
  run->add_option("--suite", run_options.suites, "Only run these suite ids");
  auto *max_len_opt =
      run->add_option("--max-len", max_len, "Per-argument monomial length bound")
          ->check(CLI::PositiveNumber);
  run->add_option("--out", out_path, "Write the report here ('-' for stdout)");
  run->add_flag("--timing", run_options.timing, "Include wall-clock timings");

  std::string group_text, predicate_text, e_text;
  std::size_t max_candidates = SearchBounds{}.max_candidates;
  auto *search = app.add_subcommand("search", "Enumerate bicharacters on a finite group");
  search->add_option("--group", group_text, "Finite group, e.g. Z2xZ2")->required();
  search->add_option("--predicate", predicate_text, "chi_ee=-1, symmetric or nonsymmetric")
      ->required();
  search->add_option("--e", e_text, "Degree e as comma-separated coordinates");
  search->add_option("--max-candidates", max_candidates, "Search space limit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion &) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "bverify: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (validate->parsed())
      return cmd_validate(config_path, out);
    if (run->parsed()) {
      if (max_len_opt->count())
        run_options.max_len = max_len;
      return cmd_run(config_path, run_options, out_path, out);
    }
    return cmd_search(group_text, predicate_text, e_text, max_candidates, out);
  } catch (const Error &e) {
    err << "bverify: " << e.what() << "\n";
    return kExitConfig;
  }
}

} // namespace bverify::cli
