#pragma once

#include "bverify/linear_map.hpp"
#include "bverify/tensor.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bverify {

/// Omega^n_E(a_1, ..., a_n) = m o (E (x) id) (delta(a_1) ... delta(a_n)).
/// Arguments may be arbitrary elements; the result is multilinear.
AlgebraElement omega_n(const GradedLinearMap &E, std::span<const AlgebraElement> args);

/// E(ab) - E(a) b - chi(|a|,|b|) E(b) a + E(1) ab, expanded over homogeneous
/// components of a and b.
AlgebraElement omega2_closed(const GradedLinearMap &E, const AlgebraElement &a,
                             const AlgebraElement &b);

/// The eight-term expansion
///   E(abc) - chi(b,c) E(ac) b - chi(a,b+c) E(bc) a + chi(a+b,c) E(c) ab
///   - E(ab) c + E(a) bc + chi(a,b) E(b) ac - E(1) abc.
AlgebraElement omega3_closed(const GradedLinearMap &E, const AlgebraElement &a,
                             const AlgebraElement &b, const AlgebraElement &c);

struct LeibnizFailure {
  Monomial a;
  Monomial b;
  AlgebraElement lhs;  ///< d(ab)
  AlgebraElement rhs;  ///< d(a) b + chi(a,b) chi(a,d(b))^-1 a d(b)
};

struct LeibnizVerdict {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::vector<LeibnizFailure> failures;
};

/// Left and right sides of the braided Leibniz rule on one basis pair.
std::pair<AlgebraElement, AlgebraElement> leibniz_sides(const GradedLinearMap &d,
                                                        const Monomial &a, const Monomial &b);

/// Checks d o m = m o (d (x) id) + m o B^-1 o (d (x) id) o B on every pair of
/// basis monomials with combined length <= max_len.
LeibnizVerdict check_braided_derivation(const GradedLinearMap &d, std::size_t max_len);

/// Which route evaluates Omega^2 / Omega^3: the closed expansions or the
/// defining composite through delta_n.
enum class OmegaPath { closed, definitional };

AlgebraElement omega2(OmegaPath path, const GradedLinearMap &E, const AlgebraElement &a,
                      const AlgebraElement &b);
AlgebraElement omega3(OmegaPath path, const GradedLinearMap &E, const AlgebraElement &a,
                      const AlgebraElement &b, const AlgebraElement &c);

// ---- chi conditions ------------------------------------------------------

enum class Condition { c34, c35_1, c35_2, c35_3, c35_4 };

std::string to_string(Condition c);
std::optional<Condition> condition_from_string(std::string_view s);

struct ConditionValue {
  Scalar value;       ///< the literal product of chi factors
  Scalar required;    ///< -1 or 1
  bool satisfied = false;
};

/// Evaluates one of the chi conditions literally, with formal degrees
/// |E(x)| = |x| + e and |Omega^2_E(x,y)| = |x| + |y| + e.
///   c34   : chi(a,b) chi(Ea,Eb) chi(a,Eb)^-1 chi(Ea,b)^-1           = -1
///   c35_1 : chi(a, b+E(bc)) chi(a, E(b)+b+c)^-1                     =  1
///   c35_2 : chi(b,E(c)) chi(a,E(bc)) chi(a+b,E(c))^-1               =  1
///   c35_3 : chi(a+b,c) chi(Omega(a,b),E(c)) chi(a+b,E(c))^-1        = -1
///   c35_4 : chi(a,b) chi(E(b),c) chi(Omega(a,c),E(b)) chi(a,E(b))^-1 chi(b,c)^-1 = -1
/// `gc` is ignored by c34 and required by the c35 family.
ConditionValue condition_eval(Condition which, const Bicharacter &chi, const GroupElement &e,
                              const GroupElement &ga, const GroupElement &gb,
                              const std::optional<GroupElement> &gc = std::nullopt);

// ---- c-functions and the bracket -----------------------------------------

/// Degree-indexed scaling c(g, h) relating Omega^2_D to the bracket.
class CFunction {
public:
  /// c(g,h) = (-1)^(s . (g + h)) for an integer functional s on coordinates.
  static CFunction sign_alternating(std::vector<long> functional, ScalarDomain domain);
  /// Explicit values; pairs outside the table evaluate to zero.
  static CFunction table(std::map<std::pair<GroupElement, GroupElement>, Scalar> values,
                         ScalarDomain domain);

  bool is_sign_alternating() const { return !is_table_; }
  const std::vector<long> &functional() const { return functional_; }
  const std::map<std::pair<GroupElement, GroupElement>, Scalar> &entries() const { return table_; }

  Scalar operator()(const GroupElement &g, const GroupElement &h) const;

private:
  ScalarDomain domain_;
  std::vector<long> functional_;
  std::map<std::pair<GroupElement, GroupElement>, Scalar> table_;
  bool is_table_ = false;
};

/// [a, b]_D = c(ga, gb)^-1 Omega^2_D(a, b) for homogeneous a, b with the given
/// (formal) degrees. Throws ZeroScalingFunction when c(ga, gb) = 0.
AlgebraElement bracket_formal(const GradedLinearMap &D, const CFunction &c,
                              const GroupElement &ga, const AlgebraElement &a,
                              const GroupElement &gb, const AlgebraElement &b,
                              OmegaPath path = OmegaPath::closed);

/// The bracket expanded over homogeneous components of a and b.
AlgebraElement bracket(const GradedLinearMap &D, const CFunction &c, const AlgebraElement &a,
                       const AlgebraElement &b);

struct CFunctionViolation {
  GroupElement g;
  GroupElement h;
  std::string which;  ///< "shift_first" for c(g,h) != -c(g+e,h), "shift_second" otherwise
};

struct CFunctionVerdict {
  bool valid = true;
  std::vector<CFunctionViolation> violations;
};

/// Checks c(g,h) = -c(g+e,h) and c(g,h) = -c(g,h+e) for g, h in `window`.
CFunctionVerdict cfun_validate(const CFunction &c, const GroupSpec &group, const GroupElement &e,
                               std::span<const GroupElement> window);

} // namespace bverify
