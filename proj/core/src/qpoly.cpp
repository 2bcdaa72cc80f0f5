#include "bverify/qpoly.hpp"

#include "bverify/errors.hpp"

#include <map>
#include <mutex>

namespace bverify {

QPoly::QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class &c) { return QPoly({c}); }

QPoly QPoly::monomial(const mpq_class &c, std::size_t power) {
  std::vector<mpq_class> v(power + 1);
  v[power] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
    coeffs_.pop_back();
}

mpq_class QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }

std::size_t QPoly::term_count() const {
  std::size_t n = 0;
  for (const auto &c : coeffs_)
    n += sgn(c) != 0;
  return n;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

QPoly operator+(const QPoly &a, const QPoly &b) {
  const auto &big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const auto &small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  QPoly r = big;
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i)
    r.coeffs_[i] += small.coeffs_[i];
  r.trim();
  return r;
}

QPoly operator-(const QPoly &a, const QPoly &b) { return a + (-b); }

QPoly operator*(const QPoly &a, const QPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(const mpq_class &c, const QPoly &a) {
  if (sgn(c) == 0)
    return {};
  QPoly r = a;
  for (auto &x : r.coeffs_)
    x *= c;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly &divisor) const {
  if (divisor.is_zero())
    throw DivisionByZero("polynomial division by zero");
  if (degree() < divisor.degree())
    return {QPoly{}, *this};
  std::vector<mpq_class> rem = coeffs_;
  std::vector<mpq_class> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const std::size_t dn = divisor.coeffs_.size();
  const mpq_class &lead = divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpq_class &top = rem[k + dn - 1];
    if (sgn(top) == 0)
      continue;
    mpq_class f = top / lead;
    quot[k] = f;
    for (std::size_t j = 0; j < dn; ++j)
      rem[k + j] -= f * divisor.coeffs_[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::monic() const {
  if (is_zero())
    return {};
  return mpq_class(1 / leading()) * *this;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string QPoly::str(std::string_view var) const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class &c = coeffs_[k];
    if (sgn(c) == 0)
      continue;
    std::string power;
    if (k >= 1) {
      power = std::string(var);
      if (k > 1)
        power += "^" + std::to_string(k);
    }
    std::string term;
    if (k == 0)
      term = c.get_str();
    else if (c == 1)
      term = power;
    else if (c == -1)
      term = "-" + power;
    else
      term = c.get_str() + "*" + power;
    if (!out.empty() && term.front() != '-')
      out += '+';
    out += term;
  }
  return out;
}

const QPoly &cyclotomic_polynomial(int order) {
  if (order < 1)
    throw DomainMismatch("cyclotomic order must be >= 1, got " + std::to_string(order));
  static std::mutex mutex;
  static std::map<int, QPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end())
      return it->second;
  }
  QPoly p = QPoly::monomial(1, static_cast<std::size_t>(order)) - QPoly::constant(1);
  for (int d = 1; d < order; ++d) {
    if (order % d != 0)
      continue;
    auto [q, r] = p.divmod(cyclotomic_polynomial(d));
    p = std::move(q);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(order, std::move(p)).first->second;
}

} // namespace bverify
