#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bverify {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class &c);
  static QPoly monomial(const mpq_class &c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpq_class> &coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t i) const;
  const mpq_class &leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t term_count() const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly &a, const QPoly &b);
  friend QPoly operator-(const QPoly &a, const QPoly &b);
  friend QPoly operator*(const QPoly &a, const QPoly &b);
  friend QPoly operator*(const mpq_class &c, const QPoly &a);
  friend bool operator==(const QPoly &a, const QPoly &b) = default;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly &divisor) const;
  QPoly operator%(const QPoly &divisor) const { return divmod(divisor).second; }

  /// Monic greatest common divisor (zero iff both inputs are zero).
  static QPoly gcd(QPoly a, QPoly b);
  QPoly monic() const;

  /// Renders with ascending powers of `var`, e.g. "-1+2*q^3".
  std::string str(std::string_view var) const;

private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// The N-th cyclotomic polynomial, computed by dividing x^N - 1 by every
/// cyclotomic polynomial of proper divisor order. Results are cached.
const QPoly &cyclotomic_polynomial(int order);

} // namespace bverify
