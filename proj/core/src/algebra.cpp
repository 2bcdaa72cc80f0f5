#include "bverify/algebra.hpp"

#include "bverify/errors.hpp"
#include "bverify/expr_parser.hpp"

#include <algorithm>

namespace bverify {

const Monomial &Monomial::unit() {
  static const Monomial u;
  return u;
}

// ---- AlgebraSpec ---------------------------------------------------------

AlgebraSpec::AlgebraSpec(std::vector<Generator> generators, Bicharacter chi, std::size_t max_len)
    : generators_(std::move(generators)), chi_(std::move(chi)), max_len_(max_len) {
  if (generators_.size() > 0xFFFF)
    throw DimensionMismatch("too many generators");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    auto &g = generators_[i];
    if (g.name.empty())
      throw ValidationError("generator " + std::to_string(i) + " has an empty name");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].name == g.name)
        throw ValidationError("duplicate generator name '" + g.name + "'");
    g.degree = group().canonicalize(g.degree);
  }
  const std::size_t n = generators_.size();
  swap_.assign(n, std::vector<Scalar>(n));
  square_zero_.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      swap_[i][j] = chi_(generators_[i].degree, generators_[j].degree);
    square_zero_[i] = !swap_[i][i].is_one();
  }
}

std::optional<std::size_t> AlgebraSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name)
      return i;
  return std::nullopt;
}

GroupElement AlgebraSpec::degree(const Monomial &m) const {
  GroupElement d = group().zero();
  for (auto i : m.indices())
    for (std::size_t k = 0; k < d.coords.size(); ++k)
      d.coords[k] += generators_[i].degree.coords[k];
  return group().canonicalize(std::move(d));
}

std::string AlgebraSpec::render(const Monomial &m) const {
  if (m.is_unit())
    return "1";
  std::string s;
  for (auto i : m.indices()) {
    if (!s.empty())
      s += '*';
    s += generators_[i].name;
  }
  return s;
}

// ---- normal forms --------------------------------------------------------

namespace {

// Multiplies together swap coefficients for a multiset of inversions.
Scalar inversion_coefficient(const AlgebraSpec &spec,
                             const std::map<std::pair<std::size_t, std::size_t>, long> &counts) {
  Scalar c = Scalar::one(spec.domain());
  for (const auto &[pair, k] : counts) {
    const Scalar &s = spec.swap_coefficient(pair.first, pair.second);
    if (!s.is_one())
      c *= s.pow(k);
  }
  return c;
}

void check_length(const AlgebraSpec &spec, std::size_t len) {
  if (len > spec.max_len())
    throw TruncationExceeded("nonzero monomial of length " + std::to_string(len) +
                             " exceeds max_len " + std::to_string(spec.max_len()));
}

} // namespace

std::optional<NormalForm> normalize_word(const AlgebraSpec &spec,
                                         std::span<const Monomial::Index> word) {
  for (auto i : word)
    if (i >= spec.generator_count())
      throw DimensionMismatch("generator index " + std::to_string(i) + " out of range");
  std::vector<Monomial::Index> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (sorted[k] == sorted[k - 1] && spec.square_zero(sorted[k]))
      return std::nullopt;
  check_length(spec, sorted.size());
  std::map<std::pair<std::size_t, std::size_t>, long> counts;
  for (std::size_t p = 0; p < word.size(); ++p)
    for (std::size_t q = p + 1; q < word.size(); ++q)
      if (word[p] > word[q])
        ++counts[{word[p], word[q]}];
  return NormalForm{inversion_coefficient(spec, counts), Monomial(std::move(sorted))};
}

std::optional<NormalForm> multiply_monomials(const AlgebraSpec &spec, const Monomial &u,
                                             const Monomial &v) {
  if (u.is_unit())
    return NormalForm{Scalar::one(spec.domain()), v};
  if (v.is_unit())
    return NormalForm{Scalar::one(spec.domain()), u};
  const auto &a = u.indices();
  const auto &b = v.indices();
  std::vector<Monomial::Index> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  for (std::size_t k = 1; k < merged.size(); ++k)
    if (merged[k] == merged[k - 1] && spec.square_zero(merged[k]))
      return std::nullopt;
  check_length(spec, merged.size());
  // Both factors are sorted, so the only inversions pair an index of u with a
  // strictly smaller index of v.
  std::map<std::pair<std::size_t, std::size_t>, long> counts;
  for (auto i : a)
    for (auto j : b) {
      if (j >= i)
        break;
      ++counts[{i, j}];
    }
  return NormalForm{inversion_coefficient(spec, counts), Monomial(std::move(merged))};
}

// ---- AlgebraElement ------------------------------------------------------

AlgebraElement AlgebraElement::unit(const ScalarDomain &domain) {
  return term(Monomial::unit(), Scalar::one(domain));
}

AlgebraElement AlgebraElement::term(const Monomial &m, const Scalar &c) {
  AlgebraElement e;
  e.add_term(m, c);
  return e;
}

AlgebraElement AlgebraElement::generator(const AlgebraSpec &spec, std::size_t i) {
  if (i >= spec.generator_count())
    throw DimensionMismatch("generator index " + std::to_string(i) + " out of range");
  return term(Monomial({static_cast<Monomial::Index>(i)}), Scalar::one(spec.domain()));
}

Scalar AlgebraElement::coefficient(const Monomial &m, const ScalarDomain &domain) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(domain) : it->second;
}

void AlgebraElement::add_term(const Monomial &m, const Scalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &b) {
  for (const auto &[m, c] : b.terms_)
    add_term(m, c);
  return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &b) {
  for (const auto &[m, c] : b.terms_)
    add_term(m, -c);
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }

AlgebraElement operator*(const Scalar &c, const AlgebraElement &a) {
  AlgebraElement r;
  if (c.is_zero())
    return r;
  for (const auto &[m, x] : a.terms_)
    r.terms_.emplace_hint(r.terms_.end(), m, c * x);
  return r;
}

std::size_t AlgebraElement::max_length() const {
  std::size_t n = 0;
  for (const auto &[m, c] : terms_)
    n = std::max(n, m.size());
  return n;
}

std::string AlgebraElement::str(const AlgebraSpec &spec) const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[m, c] : terms_) {
    std::string coeff = c.str();
    std::string term;
    if (m.is_unit()) {
      term = coeff;
    } else if (c.is_one()) {
      term = spec.render(m);
    } else if (c.is_minus_one()) {
      term = "-" + spec.render(m);
    } else {
      bool simple = coeff.find_first_of("+/()", coeff.front() == '-' ? 1 : 0) == std::string::npos &&
                    coeff.find('-', 1) == std::string::npos;
      term = (simple ? coeff : "(" + coeff + ")") + "*" + spec.render(m);
    }
    if (!out.empty() && term.front() != '-')
      out += '+';
    out += term;
  }
  return out;
}

AlgebraElement multiply(const AlgebraSpec &spec, const AlgebraElement &a,
                        const AlgebraElement &b) {
  AlgebraElement r;
  for (const auto &[u, cu] : a.terms())
    for (const auto &[v, cv] : b.terms())
      if (auto nf = multiply_monomials(spec, u, v))
        r.add_term(nf->monomial, nf->coefficient * cu * cv);
  return r;
}

std::optional<GroupElement> homogeneous_degree(const AlgebraSpec &spec, const AlgebraElement &a) {
  std::optional<GroupElement> deg;
  for (const auto &[m, c] : a.terms()) {
    GroupElement d = spec.degree(m);
    if (deg && *deg != d)
      return std::nullopt;
    deg = std::move(d);
  }
  return deg;
}

std::map<GroupElement, AlgebraElement> homogeneous_components(const AlgebraSpec &spec,
                                                              const AlgebraElement &a) {
  std::map<GroupElement, AlgebraElement> out;
  for (const auto &[m, c] : a.terms())
    out[spec.degree(m)].add_term(m, c);
  return out;
}

std::vector<Monomial> basis_enumerate(const AlgebraSpec &spec, std::size_t max_len) {
  if (max_len > spec.max_len())
    throw TruncationExceeded("basis length " + std::to_string(max_len) + " exceeds max_len " +
                             std::to_string(spec.max_len()));
  std::vector<Monomial> out{Monomial::unit()};
  std::vector<std::vector<Monomial::Index>> layer{{}};
  const auto n = static_cast<Monomial::Index>(spec.generator_count());
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Monomial::Index>> next;
    for (const auto &w : layer) {
      Monomial::Index start = w.empty() ? 0 : w.back();
      for (Monomial::Index i = start; i < n; ++i) {
        if (!w.empty() && w.back() == i && spec.square_zero(i))
          continue;
        auto v = w;
        v.push_back(i);
        next.push_back(std::move(v));
      }
    }
    // Extending lexicographically ordered prefixes in increasing index order
    // keeps each layer lexicographically sorted.
    for (const auto &w : next)
      out.emplace_back(w);
    layer = std::move(next);
  }
  return out;
}

CommutativityVerdict validate_commutativity(const AlgebraSpec &spec, std::size_t max_len) {
  CommutativityVerdict verdict;
  const auto basis = basis_enumerate(spec, max_len);
  const ScalarDomain &dom = spec.domain();
  for (const auto &a : basis) {
    AlgebraElement ea = AlgebraElement::term(a, Scalar::one(dom));
    for (const auto &b : basis) {
      AlgebraElement eb = AlgebraElement::term(b, Scalar::one(dom));
      AlgebraElement lhs = multiply(spec, ea, eb);
      AlgebraElement rhs = spec.chi()(spec.degree(a), spec.degree(b)) * multiply(spec, eb, ea);
      ++verdict.pairs_checked;
      if (lhs != rhs) {
        verdict.holds = false;
        verdict.failures.push_back({a, b, std::move(lhs), std::move(rhs)});
      }
    }
  }
  return verdict;
}

// ---- parsing -------------------------------------------------------------

namespace {

struct ElementRing {
  using value_type = AlgebraElement;
  const AlgebraSpec &spec;

  AlgebraElement scalar(const Scalar &s) const {
    return AlgebraElement::term(Monomial::unit(), s);
  }
  static bool is_scalar(const AlgebraElement &a) {
    return a.terms().empty() || (a.size() == 1 && a.terms().begin()->first.is_unit());
  }
  Scalar as_scalar(const AlgebraElement &a, const char *what) const {
    if (!is_scalar(a))
      throw ParseError(std::string(what) + " requires a scalar operand, got " + a.str(spec));
    return a.coefficient(Monomial::unit(), spec.domain());
  }

  AlgebraElement integer(const mpz_class &n) const {
    return scalar(Scalar::from_rational(spec.domain(), mpq_class(n)));
  }
  AlgebraElement symbol(std::string_view name) const {
    if (auto i = spec.index_of(name))
      return AlgebraElement::generator(spec, *i);
    return scalar(parse_scalar(spec.domain(), name));
  }
  AlgebraElement add(const AlgebraElement &a, const AlgebraElement &b) const { return a + b; }
  AlgebraElement sub(const AlgebraElement &a, const AlgebraElement &b) const { return a - b; }
  AlgebraElement mul(const AlgebraElement &a, const AlgebraElement &b) const {
    return multiply(spec, a, b);
  }
  AlgebraElement div(const AlgebraElement &a, const AlgebraElement &b) const {
    return as_scalar(b, "division").inverse() * a;
  }
  AlgebraElement neg(const AlgebraElement &a) const { return -a; }
  AlgebraElement pow(const AlgebraElement &a, long k) const {
    if (is_scalar(a))
      return scalar(as_scalar(a, "power").pow(k));
    if (k < 0)
      throw ParseError("negative power of a non-scalar element");
    AlgebraElement r = AlgebraElement::unit(spec.domain());
    for (long i = 0; i < k; ++i)
      r = multiply(spec, r, a);
    return r;
  }
};

} // namespace

AlgebraElement parse_element(const AlgebraSpec &spec, std::string_view text) {
  ElementRing ring{spec};
  return ExprParser<ElementRing>(ring, text).parse();
}

} // namespace bverify
