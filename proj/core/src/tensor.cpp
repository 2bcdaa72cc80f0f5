#include "bverify/tensor.hpp"

#include "bverify/errors.hpp"

namespace bverify {

TensorElement TensorElement::unit(const ScalarDomain &domain) {
  return term(Monomial::unit(), Monomial::unit(), Scalar::one(domain));
}

TensorElement TensorElement::term(const Monomial &left, const Monomial &right, const Scalar &c) {
  TensorElement t;
  t.add_term({left, right}, c);
  return t;
}

TensorElement TensorElement::product(const AlgebraElement &a, const AlgebraElement &b) {
  TensorElement t;
  for (const auto &[u, cu] : a.terms())
    for (const auto &[v, cv] : b.terms())
      t.add_term({u, v}, cu * cv);
  return t;
}

void TensorElement::add_term(const MonomialPair &p, const Scalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto &[p, c] : r.terms_)
    c = -c;
  return r;
}

TensorElement &TensorElement::operator+=(const TensorElement &b) {
  for (const auto &[p, c] : b.terms_)
    add_term(p, c);
  return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &b) {
  for (const auto &[p, c] : b.terms_)
    add_term(p, -c);
  return *this;
}

TensorElement operator*(const Scalar &c, const TensorElement &t) {
  TensorElement r;
  if (c.is_zero())
    return r;
  for (const auto &[p, x] : t.terms_)
    r.terms_.emplace_hint(r.terms_.end(), p, c * x);
  return r;
}

std::string TensorElement::str(const AlgebraSpec &spec) const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[p, c] : terms_) {
    if (!out.empty())
      out += " + ";
    out += c.str() + " * (" + spec.render(p.first) + " ⊗ " + spec.render(p.second) + ")";
  }
  return out;
}

TensorElement braiding_apply(const AlgebraSpec &spec, const TensorElement &t, bool inverse) {
  TensorElement r;
  for (const auto &[p, c] : t.terms()) {
    GroupElement du = spec.degree(p.first);
    GroupElement dv = spec.degree(p.second);
    Scalar factor = inverse ? spec.chi()(dv, du).inverse() : spec.chi()(du, dv);
    r.add_term({p.second, p.first}, factor * c);
  }
  return r;
}

TensorElement tensor_multiply(const AlgebraSpec &spec, const TensorElement &s,
                              const TensorElement &t) {
  TensorElement r;
  for (const auto &[p, cp] : s.terms()) {
    GroupElement db = spec.degree(p.second);
    for (const auto &[q, cq] : t.terms()) {
      auto left = multiply_monomials(spec, p.first, q.first);
      if (!left)
        continue;
      auto right = multiply_monomials(spec, p.second, q.second);
      if (!right)
        continue;
      Scalar coeff = spec.chi()(db, spec.degree(q.first)) * left->coefficient *
                     right->coefficient * cp * cq;
      r.add_term({left->monomial, right->monomial}, coeff);
    }
  }
  return r;
}

TensorElement delta(const AlgebraSpec &spec, const AlgebraElement &a) {
  AlgebraElement one = AlgebraElement::unit(spec.domain());
  return TensorElement::product(a, one) - TensorElement::product(one, a);
}

TensorElement delta_n(const AlgebraSpec &spec, std::span<const AlgebraElement> args) {
  if (args.empty())
    throw DimensionMismatch("delta_n needs at least one argument");
  TensorElement acc = delta(spec, args.front());
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (acc.is_zero())
      break;
    acc = tensor_multiply(spec, acc, delta(spec, args[i]));
  }
  return acc;
}

} // namespace bverify
