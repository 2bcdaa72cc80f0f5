#pragma once

#include "bverify/algebra.hpp"

#include <map>
#include <span>
#include <utility>

namespace bverify {

using MonomialPair = std::pair<Monomial, Monomial>;

/// Element of the braided tensor square A (x) A.
class TensorElement {
public:
  using Terms = std::map<MonomialPair, Scalar>;

  TensorElement() = default;
  static TensorElement unit(const ScalarDomain &domain);
  static TensorElement term(const Monomial &left, const Monomial &right, const Scalar &c);
  /// a (x) b, expanded bilinearly.
  static TensorElement product(const AlgebraElement &a, const AlgebraElement &b);

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const MonomialPair &p, const Scalar &c);

  TensorElement operator-() const;
  TensorElement &operator+=(const TensorElement &b);
  TensorElement &operator-=(const TensorElement &b);
  friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }
  friend TensorElement operator*(const Scalar &c, const TensorElement &t);
  friend bool operator==(const TensorElement &, const TensorElement &) = default;

  /// Terms as `coeff * (m1 ⊗ m2)` joined by " + ".
  std::string str(const AlgebraSpec &spec) const;

private:
  Terms terms_;
};

/// B(u (x) v) = chi(|u|,|v|) v (x) u; the inverse is B^-1(u (x) v) = chi(|v|,|u|)^-1 v (x) u.
TensorElement braiding_apply(const AlgebraSpec &spec, const TensorElement &t, bool inverse = false);

/// (a (x) b)(c (x) d) = chi(|b|,|c|) ac (x) bd.
TensorElement tensor_multiply(const AlgebraSpec &spec, const TensorElement &s,
                              const TensorElement &t);

/// a (x) 1 - 1 (x) a.
TensorElement delta(const AlgebraSpec &spec, const AlgebraElement &a);

/// delta(a_1) * ... * delta(a_n), associated left to right.
TensorElement delta_n(const AlgebraSpec &spec, std::span<const AlgebraElement> args);

} // namespace bverify
