#include "bverify/scalar.hpp"

#include "bverify/errors.hpp"
#include "bverify/expr_parser.hpp"

namespace bverify {

// ---- ScalarDomain --------------------------------------------------------

ScalarDomain ScalarDomain::rational() { return {}; }

ScalarDomain ScalarDomain::cyclotomic(int order) {
  if (order < 1)
    throw DomainMismatch("cyclotomic order must be >= 1, got " + std::to_string(order));
  ScalarDomain d;
  d.kind_ = Kind::cyclotomic;
  d.order_ = order;
  return d;
}

ScalarDomain ScalarDomain::rational_function(std::string variable) {
  if (variable.empty())
    throw DomainMismatch("rational function domain needs a variable name");
  ScalarDomain d;
  d.kind_ = Kind::rational_function;
  d.variable_ = std::move(variable);
  return d;
}

std::string_view ScalarDomain::symbol() const {
  switch (kind_) {
  case Kind::cyclotomic:
    return "zeta";
  case Kind::rational_function:
    return variable_;
  case Kind::rational:
    break;
  }
  return {};
}

std::string ScalarDomain::describe() const {
  switch (kind_) {
  case Kind::cyclotomic:
    return "cyclotomic(" + std::to_string(order_) + ")";
  case Kind::rational_function:
    return "rational_function(" + variable_ + ")";
  case Kind::rational:
    break;
  }
  return "rational";
}

// ---- canonicalization helpers --------------------------------------------

namespace {

QPoly reduce_cyclotomic(const ScalarDomain &d, const QPoly &p) {
  return p % cyclotomic_polynomial(d.order());
}

// Scales the pair to coprime integer coefficients with positive leading
// denominator coefficient. Assumes num and den share no polynomial factor.
RationalFunction normalize_content(QPoly num, QPoly den) {
  mpz_class lcm_den = 1;
  for (const auto *p : {&num, &den})
    for (const auto &c : p->coeffs())
      lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
  num = mpq_class(lcm_den) * num;
  den = mpq_class(lcm_den) * den;
  mpz_class content = 0;
  for (const auto *p : {&num, &den})
    for (const auto &c : p->coeffs())
      content = gcd(content, mpz_class(c.get_num()));
  mpq_class scale(1, content);
  if (sgn(den.leading()) < 0)
    scale = -scale;
  return {scale * num, scale * den};
}

RationalFunction make_rational_function(const QPoly &num, const QPoly &den) {
  if (den.is_zero())
    throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero())
    return {QPoly{}, QPoly::constant(1)};
  QPoly g = QPoly::gcd(num, den);
  if (g.degree() > 0)
    return normalize_content(num.divmod(g).first, den.divmod(g).first);
  return normalize_content(num, den);
}

// Inverse of p modulo the irreducible m via the extended Euclidean algorithm.
QPoly inverse_mod(const QPoly &p, const QPoly &m) {
  QPoly r0 = m, r1 = p, s0, s1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because m is irreducible and p is a nonzero residue.
  return (mpq_class(1 / r0.coeff(0)) * s0) % m;
}

} // namespace

// ---- Scalar --------------------------------------------------------------

Scalar::Scalar() : rep_(mpq_class(0)) {}

Scalar::Scalar(ScalarDomain domain, std::variant<mpq_class, QPoly, RationalFunction> rep)
    : domain_(std::move(domain)), rep_(std::move(rep)) {}

Scalar Scalar::zero(const ScalarDomain &domain) { return from_int(domain, 0); }
Scalar Scalar::one(const ScalarDomain &domain) { return from_int(domain, 1); }

Scalar Scalar::from_int(const ScalarDomain &domain, long value) {
  return from_rational(domain, mpq_class(value));
}

Scalar Scalar::from_rational(const ScalarDomain &domain, const mpq_class &value) {
  switch (domain.kind()) {
  case ScalarDomain::Kind::rational:
    return {domain, value};
  case ScalarDomain::Kind::cyclotomic:
    return cyclotomic(domain, QPoly::constant(value));
  case ScalarDomain::Kind::rational_function:
    return fraction(domain, QPoly::constant(value), QPoly::constant(1));
  }
  return {};
}

Scalar Scalar::generator(const ScalarDomain &domain) {
  switch (domain.kind()) {
  case ScalarDomain::Kind::cyclotomic:
    return cyclotomic(domain, QPoly::monomial(1, 1));
  case ScalarDomain::Kind::rational_function:
    return fraction(domain, QPoly::monomial(1, 1), QPoly::constant(1));
  case ScalarDomain::Kind::rational:
    break;
  }
  throw DomainMismatch("the rational domain has no generator symbol");
}

Scalar Scalar::cyclotomic(const ScalarDomain &domain, const QPoly &poly) {
  if (domain.kind() != ScalarDomain::Kind::cyclotomic)
    throw DomainMismatch("expected a cyclotomic domain, got " + domain.describe());
  return {domain, reduce_cyclotomic(domain, poly)};
}

Scalar Scalar::fraction(const ScalarDomain &domain, const QPoly &num, const QPoly &den) {
  if (domain.kind() != ScalarDomain::Kind::rational_function)
    throw DomainMismatch("expected a rational function domain, got " + domain.describe());
  return {domain, make_rational_function(num, den)};
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>)
          return sgn(v) == 0;
        else if constexpr (std::is_same_v<T, QPoly>)
          return v.is_zero();
        else
          return v.num.is_zero();
      },
      rep_);
}

bool Scalar::is_one() const { return *this == one(domain_); }
bool Scalar::is_minus_one() const { return *this == from_int(domain_, -1); }

void require_same_domain(const Scalar &a, const Scalar &b) {
  if (!(a.domain() == b.domain()))
    throw DomainMismatch("operands in " + a.domain().describe() + " and " +
                         b.domain().describe());
}

Scalar Scalar::operator-() const {
  return std::visit(
      [&](const auto &v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RationalFunction>)
          return {domain_, RationalFunction{-v.num, v.den}};
        else
          return {domain_, T(-v)};
      },
      rep_);
}

Scalar operator+(const Scalar &a, const Scalar &b) {
  require_same_domain(a, b);
  switch (a.domain_.kind()) {
  case ScalarDomain::Kind::rational:
    return {a.domain_, mpq_class(std::get<mpq_class>(a.rep_) + std::get<mpq_class>(b.rep_))};
  case ScalarDomain::Kind::cyclotomic:
    return {a.domain_, std::get<QPoly>(a.rep_) + std::get<QPoly>(b.rep_)};
  case ScalarDomain::Kind::rational_function: {
    const auto &x = std::get<RationalFunction>(a.rep_);
    const auto &y = std::get<RationalFunction>(b.rep_);
    if (x.den == y.den)
      return {a.domain_, make_rational_function(x.num + y.num, x.den)};
    return {a.domain_, make_rational_function(x.num * y.den + y.num * x.den, x.den * y.den)};
  }
  }
  return {};
}

Scalar operator-(const Scalar &a, const Scalar &b) { return a + (-b); }

Scalar operator*(const Scalar &a, const Scalar &b) {
  require_same_domain(a, b);
  switch (a.domain_.kind()) {
  case ScalarDomain::Kind::rational:
    return {a.domain_, mpq_class(std::get<mpq_class>(a.rep_) * std::get<mpq_class>(b.rep_))};
  case ScalarDomain::Kind::cyclotomic:
    return {a.domain_,
            reduce_cyclotomic(a.domain_, std::get<QPoly>(a.rep_) * std::get<QPoly>(b.rep_))};
  case ScalarDomain::Kind::rational_function: {
    const auto &x = std::get<RationalFunction>(a.rep_);
    const auto &y = std::get<RationalFunction>(b.rep_);
    return {a.domain_, make_rational_function(x.num * y.num, x.den * y.den)};
  }
  }
  return {};
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  switch (domain_.kind()) {
  case ScalarDomain::Kind::rational:
    return {domain_, mpq_class(1 / std::get<mpq_class>(rep_))};
  case ScalarDomain::Kind::cyclotomic:
    return {domain_,
            inverse_mod(std::get<QPoly>(rep_), cyclotomic_polynomial(domain_.order()))};
  case ScalarDomain::Kind::rational_function: {
    const auto &x = std::get<RationalFunction>(rep_);
    return {domain_, normalize_content(x.den, x.num)};
  }
  }
  return {};
}

Scalar operator/(const Scalar &a, const Scalar &b) {
  require_same_domain(a, b);
  return a * b.inverse();
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero())
      throw DivisionByZero("zero raised to a negative power");
    return inverse().pow(-exponent);
  }
  Scalar result = one(domain_);
  Scalar base = *this;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e != 0)
      base *= base;
  }
  return result;
}

bool operator==(const Scalar &a, const Scalar &b) {
  return a.domain_ == b.domain_ && a.rep_ == b.rep_;
}

std::string Scalar::str() const {
  switch (domain_.kind()) {
  case ScalarDomain::Kind::rational:
    return std::get<mpq_class>(rep_).get_str();
  case ScalarDomain::Kind::cyclotomic:
    return std::get<QPoly>(rep_).str("zeta");
  case ScalarDomain::Kind::rational_function:
    break;
  }
  const auto &f = std::get<RationalFunction>(rep_);
  const std::string &var = domain_.variable();
  std::string num = f.num.str(var);
  if (f.den == QPoly::constant(1))
    return num;
  if (f.num.term_count() > 1)
    num = "(" + num + ")";
  std::string den = f.den.str(var);
  bool bare = f.den.term_count() == 1 && (f.den.leading() == 1 || f.den.is_constant());
  if (!bare)
    den = "(" + den + ")";
  return num + "/" + den;
}

// ---- parsing -------------------------------------------------------------

namespace {

struct ScalarRing {
  using value_type = Scalar;
  const ScalarDomain &domain;

  Scalar integer(const mpz_class &n) const { return Scalar::from_rational(domain, mpq_class(n)); }
  Scalar symbol(std::string_view name) const {
    if (!domain.symbol().empty() && name == domain.symbol())
      return Scalar::generator(domain);
    if (name == "zeta" || name == "q")
      throw DomainMismatch("symbol '" + std::string(name) + "' is not available in " +
                           domain.describe());
    throw ParseError("unknown symbol '" + std::string(name) + "'");
  }
  Scalar add(const Scalar &a, const Scalar &b) const { return a + b; }
  Scalar sub(const Scalar &a, const Scalar &b) const { return a - b; }
  Scalar mul(const Scalar &a, const Scalar &b) const { return a * b; }
  Scalar div(const Scalar &a, const Scalar &b) const { return a / b; }
  Scalar neg(const Scalar &a) const { return -a; }
  Scalar pow(const Scalar &a, long k) const { return a.pow(k); }
};

} // namespace

Scalar parse_scalar(const ScalarDomain &domain, std::string_view text) {
  ScalarRing ring{domain};
  return ExprParser<ScalarRing>(ring, text).parse();
}

} // namespace bverify
