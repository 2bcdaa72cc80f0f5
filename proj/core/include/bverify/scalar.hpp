#pragma once

#include "bverify/qpoly.hpp"

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace bverify {

/// The field a computation lives in: Q, Q(zeta_N), or Q(var).
class ScalarDomain {
public:
  enum class Kind { rational, cyclotomic, rational_function };

  ScalarDomain() = default;
  static ScalarDomain rational();
  /// Q adjoined a primitive N-th root of unity `zeta`. Requires N >= 1.
  static ScalarDomain cyclotomic(int order);
  static ScalarDomain rational_function(std::string variable = "q");

  Kind kind() const { return kind_; }
  int order() const { return order_; }
  const std::string &variable() const { return variable_; }

  /// Symbol naming the adjoined element, or empty for Q.
  std::string_view symbol() const;
  std::string describe() const;

  friend bool operator==(const ScalarDomain &, const ScalarDomain &) = default;

private:
  Kind kind_ = Kind::rational;
  int order_ = 1;
  std::string variable_;
};

/// Reduced fraction of integer-coefficient polynomials. The pair is coprime
/// over Z[x] (no common polynomial factor, no common integer content) and the
/// denominator has positive leading coefficient. Zero is 0/1.
struct RationalFunction {
  QPoly num;
  QPoly den;
  friend bool operator==(const RationalFunction &, const RationalFunction &) = default;
};

/// Exact element of a ScalarDomain held in canonical form, so equality is
/// representation identity.
class Scalar {
public:
  /// Default-constructed scalar is rational zero.
  Scalar();
  static Scalar zero(const ScalarDomain &domain);
  static Scalar one(const ScalarDomain &domain);
  static Scalar from_int(const ScalarDomain &domain, long value);
  static Scalar from_rational(const ScalarDomain &domain, const mpq_class &value);
  /// zeta in a cyclotomic domain, the variable in a rational-function domain.
  static Scalar generator(const ScalarDomain &domain);
  /// Cyclotomic residue from an arbitrary polynomial in zeta.
  static Scalar cyclotomic(const ScalarDomain &domain, const QPoly &poly);
  /// Rational function num/den, reduced. Throws DivisionByZero if den == 0.
  static Scalar fraction(const ScalarDomain &domain, const QPoly &num, const QPoly &den);

  const ScalarDomain &domain() const { return domain_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_minus_one() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  friend Scalar operator+(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a, const Scalar &b);
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator/(const Scalar &a, const Scalar &b);
  Scalar &operator+=(const Scalar &b) { return *this = *this + b; }
  Scalar &operator-=(const Scalar &b) { return *this = *this - b; }
  Scalar &operator*=(const Scalar &b) { return *this = *this * b; }

  friend bool operator==(const Scalar &a, const Scalar &b);

  /// Canonical rendering, re-parseable by parse_scalar.
  std::string str() const;

  /// Canonical representation, exposed for tests and serialization.
  const std::variant<mpq_class, QPoly, RationalFunction> &rep() const { return rep_; }

private:
  Scalar(ScalarDomain domain, std::variant<mpq_class, QPoly, RationalFunction> rep);
  ScalarDomain domain_;
  std::variant<mpq_class, QPoly, RationalFunction> rep_;
};

/// Throws DomainMismatch unless both scalars share a domain.
void require_same_domain(const Scalar &a, const Scalar &b);

/// Parses integers, fractions, `q`/`zeta` (as the domain allows), `+ - * / ^`
/// with integer exponents, and parentheses.
Scalar parse_scalar(const ScalarDomain &domain, std::string_view text);

} // namespace bverify
