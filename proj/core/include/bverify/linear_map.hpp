#pragma once

#include "bverify/algebra.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace bverify {

/// Degree-homogeneous linear endomorphism of a presented algebra:
/// every image of a monomial m has degree |m| + degree().
///
/// Built from tables, braided-derivation rules, left multiplications and
/// their composites, sums and scalings. Images are computed per basis
/// monomial on demand and memoized; maps are immutable and cheap to copy.
class GradedLinearMap {
public:
  static GradedLinearMap zero(AlgebraSpecPtr spec, GroupElement degree);
  static GradedLinearMap identity(AlgebraSpecPtr spec);

  /// Explicit images on basis monomials; unlisted monomials map to zero.
  static GradedLinearMap from_table(AlgebraSpecPtr spec, GroupElement degree,
                                    std::map<Monomial, AlgebraElement> table);

  /// Extends generator values to the braided derivation
  ///   d(ab) = d(a) b + chi(|a|,|b|) chi(|a|,|d(b)|)^-1 a d(b),
  /// with d(1) = 0. Generators absent from `values` map to zero.
  static GradedLinearMap derivation(AlgebraSpecPtr spec,
                                    std::map<std::size_t, AlgebraElement> values,
                                    GroupElement degree);

  /// a -> h*a. `h` must be homogeneous; `degree` is required only when h = 0.
  static GradedLinearMap left_multiply(AlgebraSpecPtr spec, AlgebraElement h,
                                       std::optional<GroupElement> degree = std::nullopt);

  /// outer o inner.
  static GradedLinearMap compose(const GradedLinearMap &outer, const GradedLinearMap &inner);
  static GradedLinearMap sum(const GradedLinearMap &a, const GradedLinearMap &b);
  static GradedLinearMap scale(const Scalar &c, const GradedLinearMap &a);

  const GroupElement &degree() const;
  const AlgebraSpec &spec() const;
  const AlgebraSpecPtr &spec_ptr() const;

  /// Image of a basis monomial. Throws OutOfBasis beyond max_len.
  AlgebraElement apply(const Monomial &m) const;
  AlgebraElement operator()(const AlgebraElement &a) const;

  /// Formal degree of E(a) for an element of degree g: g + degree().
  GroupElement image_degree(const GroupElement &g) const;

  std::string describe() const;

  struct Node;

private:
  explicit GradedLinearMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws InhomogeneousRule unless `a` is zero or homogeneous of `expected` degree.
void require_homogeneous(const AlgebraSpec &spec, const AlgebraElement &a,
                         const GroupElement &expected, const std::string &context);

} // namespace bverify
