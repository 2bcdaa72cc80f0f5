#pragma once

#include "bverify/omega.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bverify {

enum class SuiteId {
  bcomm,
  defn_vs_closed2,
  defn_vs_closed3,
  lemma31,
  lemma32,
  lemma33,
  jacobi,
  leibniz_right,
  leibniz_paper,
  bracket_derivation,
  derivation_def22,
};

std::string to_string(SuiteId id);
std::optional<SuiteId> suite_from_string(std::string_view s);
/// Every suite id in declaration order.
const std::vector<SuiteId> &all_suites();
/// Number of basis monomials in one tuple of the suite.
std::size_t suite_arity(SuiteId id);
/// True for suites that evaluate a map (all but bcomm).
bool suite_needs_map(SuiteId id);
/// True for suites that presuppose D(1) = 0, D^2 = 0 and Omega^3_D = 0.
bool suite_needs_special_map(SuiteId id);

enum class Mode { assert_holds, report };
enum class Status { holds, fails, skipped };

std::string to_string(Mode m);
std::string to_string(Status s);

/// Tuple bounds: each argument has length <= per_arg, the tuple has total
/// length <= total.
struct Bounds {
  std::size_t per_arg = 2;
  std::size_t total = 6;
  friend bool operator==(const Bounds &, const Bounds &) = default;
};

/// A bundle of algebra, named maps and optional c-function to run suites on.
struct Instance {
  std::string name;
  AlgebraSpecPtr spec;
  std::map<std::string, GradedLinearMap> maps;
  std::optional<CFunction> cfun;

  const GradedLinearMap &map(const std::string &name) const;
};

struct SuiteRequest {
  SuiteId suite = SuiteId::bcomm;
  std::string map;  ///< empty for bcomm
  Mode mode = Mode::report;
  Bounds bounds;
};

struct Failure {
  std::vector<Monomial> inputs;
  AlgebraElement lhs;
  AlgebraElement rhs;
  friend bool operator==(const Failure &, const Failure &) = default;
};

struct Verdict {
  SuiteId suite = SuiteId::bcomm;
  std::string instance;
  std::string map;
  Mode mode = Mode::report;
  Bounds bounds;
  std::size_t cases_checked = 0;
  std::vector<Failure> failures;
  Status status = Status::skipped;
  std::string reason;  ///< set when skipped
};

/// Runs a suite over every basis tuple within bounds in (length, lex) tuple
/// order. Suites requiring the special-map conditions are skipped when the
/// precheck fails; convention-dependent suites are skipped in assert mode on
/// instances that are not B-commutative.
Verdict run_suite(const Instance &instance, const SuiteRequest &request,
                  OmegaPath path = OmegaPath::closed);

/// Both sides of the suite's identity for one tuple.
std::pair<AlgebraElement, AlgebraElement> evaluate_case(const Instance &instance,
                                                        const SuiteRequest &request,
                                                        const std::vector<Monomial> &tuple,
                                                        OmegaPath path = OmegaPath::closed);

/// True if recomputing both sides reproduces the stored mismatch.
bool reverify_failure(const Instance &instance, const SuiteRequest &request,
                      const Failure &failure, OmegaPath path = OmegaPath::closed);

/// Basis tuples of the given arity within bounds, in deterministic order.
std::vector<std::vector<Monomial>> enumerate_tuples(const AlgebraSpec &spec, std::size_t arity,
                                                    const Bounds &bounds);

struct PrecheckFact {
  bool holds = true;
  std::size_t cases_checked = 0;
  std::optional<std::vector<Monomial>> witness;  ///< first failing input
  AlgebraElement witness_value;                  ///< the nonzero value there
};

struct PrecheckReport {
  std::string map;
  PrecheckFact d_of_one;     ///< D(1) = 0
  PrecheckFact d_squared;    ///< D^2 = 0 on the basis up to max_len
  PrecheckFact omega3_zero;  ///< Omega^3_D = 0 on bounded triples
  bool all_hold() const { return d_of_one.holds && d_squared.holds && omega3_zero.holds; }
};

PrecheckReport precheck_special_map(const Instance &instance, const std::string &map,
                                    const Bounds &bounds);

/// chi(g_i, g_j) chi(g_j, g_i) = 1 for every pair of generator degrees, which
/// by bilinearity is B-commutativity on all occupied degrees.
bool is_b_commutative(const AlgebraSpec &spec);

} // namespace bverify
