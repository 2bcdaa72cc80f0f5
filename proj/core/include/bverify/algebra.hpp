#pragma once

#include "bverify/grading.hpp"
#include "bverify/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bverify {

struct Generator {
  std::string name;
  GroupElement degree;
};

/// Sorted word of generator indices: a normal-form basis monomial.
/// Ordered by (length, lexicographic indices).
class Monomial {
public:
  using Index = std::uint16_t;

  Monomial() = default;
  /// Caller guarantees `indices` is non-decreasing.
  explicit Monomial(std::vector<Index> indices) : indices_(std::move(indices)) {}

  static const Monomial &unit();

  std::size_t size() const { return indices_.size(); }
  bool is_unit() const { return indices_.empty(); }
  const std::vector<Index> &indices() const { return indices_; }

  friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) {
    if (auto c = a.indices_.size() <=> b.indices_.size(); c != 0)
      return c;
    return a.indices_ <=> b.indices_;
  }
  friend bool operator==(const Monomial &, const Monomial &) = default;

private:
  std::vector<Index> indices_;
};

/// Presented chi-commutative algebra: generators x_i of degree g_i subject to
/// x_j x_i = chi(g_j, g_i) x_i x_j for j > i, and x_i^2 = 0 when chi(g_i, g_i) != 1.
/// Monomials are materialized up to max_len.
class AlgebraSpec {
public:
  AlgebraSpec(std::vector<Generator> generators, Bicharacter chi, std::size_t max_len);

  const std::vector<Generator> &generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  const Bicharacter &chi() const { return chi_; }
  const GroupSpec &group() const { return chi_.group(); }
  const ScalarDomain &domain() const { return chi_.domain(); }
  std::size_t max_len() const { return max_len_; }

  /// chi(|x_i|, |x_j|).
  const Scalar &swap_coefficient(std::size_t i, std::size_t j) const { return swap_[i][j]; }
  bool square_zero(std::size_t i) const { return square_zero_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  GroupElement degree(const Monomial &m) const;
  std::string render(const Monomial &m) const;

private:
  std::vector<Generator> generators_;
  Bicharacter chi_;
  std::size_t max_len_;
  std::vector<std::vector<Scalar>> swap_;
  std::vector<bool> square_zero_;
};

using AlgebraSpecPtr = std::shared_ptr<const AlgebraSpec>;

/// Result of reducing a word: coefficient times normal-form monomial.
struct NormalForm {
  Scalar coefficient;
  Monomial monomial;
};

/// Sorts `word` by adjacent swaps x_j x_i -> chi(|x_j|,|x_i|) x_i x_j (j > i).
/// Returns nullopt when the word vanishes. Throws TruncationExceeded when the
/// surviving monomial is longer than max_len.
std::optional<NormalForm> normalize_word(const AlgebraSpec &spec,
                                         std::span<const Monomial::Index> word);

/// Normal form of the product u*v of two basis monomials.
std::optional<NormalForm> multiply_monomials(const AlgebraSpec &spec, const Monomial &u,
                                             const Monomial &v);

/// Finite linear combination of basis monomials with nonzero coefficients.
class AlgebraElement {
public:
  using Terms = std::map<Monomial, Scalar>;

  AlgebraElement() = default;
  static AlgebraElement unit(const ScalarDomain &domain);
  static AlgebraElement term(const Monomial &m, const Scalar &c);
  /// The generator x_i with coefficient 1.
  static AlgebraElement generator(const AlgebraSpec &spec, std::size_t i);

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of m (zero in `domain` when absent).
  Scalar coefficient(const Monomial &m, const ScalarDomain &domain) const;

  /// Adds c*m, pruning a cancelled coefficient.
  void add_term(const Monomial &m, const Scalar &c);

  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b);
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b);
  friend AlgebraElement operator*(const Scalar &c, const AlgebraElement &a);
  AlgebraElement &operator+=(const AlgebraElement &b);
  AlgebraElement &operator-=(const AlgebraElement &b);

  friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

  /// Maximum monomial length, 0 for zero.
  std::size_t max_length() const;
  std::string str(const AlgebraSpec &spec) const;

private:
  Terms terms_;
};

AlgebraElement multiply(const AlgebraSpec &spec, const AlgebraElement &a,
                        const AlgebraElement &b);

/// Degree of a nonzero homogeneous element; nullopt if zero or inhomogeneous.
std::optional<GroupElement> homogeneous_degree(const AlgebraSpec &spec, const AlgebraElement &a);

/// Splits an element by degree; components sum to the input.
std::map<GroupElement, AlgebraElement> homogeneous_components(const AlgebraSpec &spec,
                                                              const AlgebraElement &a);

/// All nonzero normal-form monomials of length <= max_len in (length, lex) order.
std::vector<Monomial> basis_enumerate(const AlgebraSpec &spec, std::size_t max_len);

struct CommutativityFailure {
  Monomial a;
  Monomial b;
  AlgebraElement lhs;  ///< a*b
  AlgebraElement rhs;  ///< chi(|a|,|b|) b*a
};

struct CommutativityVerdict {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::vector<CommutativityFailure> failures;
};

/// Checks a*b = chi(|a|,|b|) b*a on all basis pairs of length <= max_len.
CommutativityVerdict validate_commutativity(const AlgebraSpec &spec, std::size_t max_len);

/// Parses an algebra element such as "x1*x2 - (q+1)*x3 + 1/2".
AlgebraElement parse_element(const AlgebraSpec &spec, std::string_view text);

} // namespace bverify
