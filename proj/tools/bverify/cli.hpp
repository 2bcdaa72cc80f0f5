#pragma once

#include "bverify/search.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bverify::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitConfig = 2 };

/// Parses "Z2", "Z2xZ2" or "Z2,Z3" into a finite group. Throws ValidationError.
GroupSpec parse_group_flag(const std::string &text);

/// Parses "chi_ee=-1", "symmetric" or "nonsymmetric"; `e` is the --e vector.
SearchPredicate parse_predicate_flag(const std::string &text, const GroupSpec &group,
                                     const std::string &e);

/// Deterministic table of search results, one matrix per line.
std::string render_search_table(const GroupSpec &group, const SearchPredicate &predicate,
                                const std::vector<Bicharacter> &results);

/// Entry point; `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bverify::cli
