#pragma once

#include "bverify/verify.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bverify::cli {

inline constexpr const char *kConfigSchema = "bverify-config/1";

struct GeneratorDecl {
  std::string name;
  std::vector<long> degree;
  friend bool operator==(const GeneratorDecl &, const GeneratorDecl &) = default;
};

/// One named linear map. `kind` is "derivation" (values keyed by generator),
/// "table" (values keyed by monomial) or "composite" (expr). Derivations are
/// listed under "derivations", the other kinds under "maps".
struct MapDecl {
  std::string name;
  std::string kind;
  std::vector<long> degree;
  std::map<std::string, std::string> values;
  std::string expr;
  friend bool operator==(const MapDecl &, const MapDecl &) = default;
};

struct CFunEntry {
  std::vector<long> g;
  std::vector<long> h;
  std::string value;
  friend bool operator==(const CFunEntry &, const CFunEntry &) = default;
};

struct CFunDecl {
  std::string kind;  ///< "sign_alternating" or "table"
  std::vector<long> functional;
  std::vector<CFunEntry> entries;
  friend bool operator==(const CFunDecl &, const CFunDecl &) = default;
};

struct SuiteDecl {
  std::string id;
  std::string map;
  std::string mode;  ///< "assert" or "report"
  Bounds bounds;
  friend bool operator==(const SuiteDecl &, const SuiteDecl &) = default;
};

struct PrecheckDecl {
  std::string map;
  Bounds bounds;
  friend bool operator==(const PrecheckDecl &, const PrecheckDecl &) = default;
};

/// Validated configuration. All scalar and element strings are stored in
/// canonical rendering.
struct Config {
  std::string schema = kConfigSchema;
  std::string name;
  ScalarDomain domain;
  GroupSpec group;
  std::vector<std::vector<std::string>> bicharacter;
  std::vector<GeneratorDecl> generators;
  std::size_t max_len = 0;
  std::vector<MapDecl> derivations;
  std::vector<MapDecl> maps;
  std::optional<CFunDecl> cfun;
  std::vector<PrecheckDecl> prechecks;
  std::vector<SuiteDecl> suites;
  std::optional<std::string> output;

  friend bool operator==(const Config &, const Config &) = default;
};

/// Reads and validates a JSON config. Throws ParseError (malformed JSON, with
/// line and column), SchemaError (missing or mistyped field, with its JSON
/// pointer) or ValidationError (inconsistent content).
Config parse_config(const std::filesystem::path &path);
Config parse_config_text(const std::string &text, const std::string &source = "<config>");

/// Canonical JSON rendering; parse_config_text(render_config(c).dump()) == c.
nlohmann::json render_config(const Config &config);

/// Hex SHA-256 of the canonical rendering.
std::string config_digest(const Config &config);

/// Builds the algebra, maps and c-function described by the config.
Instance build_instance(const Config &config);

/// Parses a composite map expression such as "lmul(x1) . der(d3) . der(d2)".
GradedLinearMap parse_map_expr(const AlgebraSpecPtr &spec, std::string_view expr,
                               const std::map<std::string, GradedLinearMap> &known,
                               const std::map<std::string, std::string> &kinds);

} // namespace bverify::cli
