#pragma once

#include "bverify/grading.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bverify {

struct SearchPredicate {
  enum class Kind { chi_ee_eq_minus_one, symmetric, nonsymmetric };
  Kind kind = Kind::symmetric;
  GroupElement e;  ///< used by chi_ee_eq_minus_one

  std::string str() const;
};

struct SearchBounds {
  /// Upper limit on the number of candidate matrices enumerated.
  std::size_t max_candidates = std::size_t{1} << 20;
};

/// Scalar domain holding all roots of unity a bicharacter on a finite group
/// can take: Q when every torsion order divides 2, else Q(zeta_L) with L the
/// lcm of the orders.
ScalarDomain root_of_unity_domain(const GroupSpec &group);

/// Exhaustively enumerates generator matrices on a finite group whose entry
/// (i,j) ranges over the gcd(n_i, n_j)-th roots of unity, keeping those that
/// satisfy `predicate`. Row-major lexicographic order in the root exponents.
std::vector<Bicharacter> bicharacter_search(const GroupSpec &group,
                                            const SearchPredicate &predicate,
                                            const SearchBounds &bounds = {});

} // namespace bverify
