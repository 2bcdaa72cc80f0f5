#include "bverify/omega.hpp"

#include "bverify/errors.hpp"

namespace bverify {

namespace {

AlgebraElement times(const AlgebraSpec &s, const AlgebraElement &a, const AlgebraElement &b) {
  return multiply(s, a, b);
}

} // namespace

AlgebraElement omega_n(const GradedLinearMap &E, std::span<const AlgebraElement> args) {
  const AlgebraSpec &s = E.spec();
  TensorElement t = delta_n(s, args);
  AlgebraElement out;
  const ScalarDomain &dom = s.domain();
  for (const auto &[pair, c] : t.terms()) {
    AlgebraElement left = E.apply(pair.first);
    if (left.is_zero())
      continue;
    out += c * times(s, left, AlgebraElement::term(pair.second, Scalar::one(dom)));
  }
  return out;
}

AlgebraElement omega2_closed(const GradedLinearMap &E, const AlgebraElement &a,
                             const AlgebraElement &b) {
  const AlgebraSpec &s = E.spec();
  const AlgebraElement one = AlgebraElement::unit(s.domain());
  const AlgebraElement E1 = E(one);
  AlgebraElement out;
  for (const auto &[ga, A] : homogeneous_components(s, a)) {
    for (const auto &[gb, B] : homogeneous_components(s, b)) {
      AlgebraElement AB = times(s, A, B);
      out += E(AB);
      out -= times(s, E(A), B);
      out -= s.chi()(ga, gb) * times(s, E(B), A);
      out += times(s, E1, AB);
    }
  }
  return out;
}

AlgebraElement omega3_closed(const GradedLinearMap &E, const AlgebraElement &a,
                             const AlgebraElement &b, const AlgebraElement &c) {
  const AlgebraSpec &s = E.spec();
  const auto &chi = s.chi();
  const auto &G = s.group();
  const AlgebraElement E1 = E(AlgebraElement::unit(s.domain()));
  const auto cb = homogeneous_components(s, b);
  const auto cc = homogeneous_components(s, c);
  AlgebraElement out;
  for (const auto &[ga, A] : homogeneous_components(s, a)) {
    for (const auto &[gb, B] : cb) {
      AlgebraElement AB = times(s, A, B);
      for (const auto &[gc, C] : cc) {
        AlgebraElement AC = times(s, A, C);
        AlgebraElement BC = times(s, B, C);
        AlgebraElement ABC = times(s, AB, C);
        out += E(ABC);
        out -= chi(gb, gc) * times(s, E(AC), B);
        out -= chi(ga, G.add(gb, gc)) * times(s, E(BC), A);
        out += chi(G.add(ga, gb), gc) * times(s, E(C), AB);
        out -= times(s, E(AB), C);
        out += times(s, E(A), BC);
        out += chi(ga, gb) * times(s, E(B), AC);
        out -= times(s, E1, ABC);
      }
    }
  }
  return out;
}

AlgebraElement omega2(OmegaPath path, const GradedLinearMap &E, const AlgebraElement &a,
                      const AlgebraElement &b) {
  if (path == OmegaPath::closed)
    return omega2_closed(E, a, b);
  const AlgebraElement args[] = {a, b};
  return omega_n(E, args);
}

AlgebraElement omega3(OmegaPath path, const GradedLinearMap &E, const AlgebraElement &a,
                      const AlgebraElement &b, const AlgebraElement &c) {
  if (path == OmegaPath::closed)
    return omega3_closed(E, a, b, c);
  const AlgebraElement args[] = {a, b, c};
  return omega_n(E, args);
}

// ---- braided derivations -------------------------------------------------

std::pair<AlgebraElement, AlgebraElement> leibniz_sides(const GradedLinearMap &d,
                                                        const Monomial &a, const Monomial &b) {
  const AlgebraSpec &s = d.spec();
  const ScalarDomain &dom = s.domain();
  const AlgebraElement ea = AlgebraElement::term(a, Scalar::one(dom));
  const AlgebraElement eb = AlgebraElement::term(b, Scalar::one(dom));
  const GroupElement ga = s.degree(a);
  const GroupElement gb = s.degree(b);
  AlgebraElement lhs = d(times(s, ea, eb));
  // m o B^-1 o (d (x) id) o B on a (x) b: B gives chi(a,b) b (x) a, then
  // d(b) (x) a, and B^-1 returns chi(|a|,|d(b)|)^-1 a (x) d(b).
  Scalar twist = s.chi()(ga, gb) * s.chi()(ga, d.image_degree(gb)).inverse();
  AlgebraElement rhs = times(s, d.apply(a), eb) + twist * times(s, ea, d.apply(b));
  return {std::move(lhs), std::move(rhs)};
}

LeibnizVerdict check_braided_derivation(const GradedLinearMap &d, std::size_t max_len) {
  const AlgebraSpec &s = d.spec();
  LeibnizVerdict verdict;
  const auto basis = basis_enumerate(s, std::min(max_len, s.max_len()));
  for (const auto &a : basis) {
    for (const auto &b : basis) {
      if (a.size() + b.size() > max_len)
        continue;
      auto [lhs, rhs] = leibniz_sides(d, a, b);
      ++verdict.pairs_checked;
      if (lhs != rhs) {
        verdict.holds = false;
        verdict.failures.push_back({a, b, std::move(lhs), std::move(rhs)});
      }
    }
  }
  return verdict;
}

// ---- conditions ----------------------------------------------------------

std::string to_string(Condition c) {
  switch (c) {
  case Condition::c34:
    return "c34";
  case Condition::c35_1:
    return "c35_1";
  case Condition::c35_2:
    return "c35_2";
  case Condition::c35_3:
    return "c35_3";
  case Condition::c35_4:
    return "c35_4";
  }
  return "?";
}

std::optional<Condition> condition_from_string(std::string_view s) {
  for (auto c : {Condition::c34, Condition::c35_1, Condition::c35_2, Condition::c35_3,
                 Condition::c35_4})
    if (to_string(c) == s)
      return c;
  return std::nullopt;
}

ConditionValue condition_eval(Condition which, const Bicharacter &chi, const GroupElement &e,
                              const GroupElement &ga, const GroupElement &gb,
                              const std::optional<GroupElement> &gc) {
  const GroupSpec &G = chi.group();
  const ScalarDomain &dom = chi.domain();
  auto E = [&](const GroupElement &g) { return G.add(g, e); };
  auto plus = [&](const GroupElement &g, const GroupElement &h) { return G.add(g, h); };
  auto inv = [&](const GroupElement &g, const GroupElement &h) { return chi(g, h).inverse(); };
  if (which != Condition::c34 && !gc)
    throw DimensionMismatch(to_string(which) + " needs a third degree");

  Scalar value = Scalar::one(dom);
  Scalar required = Scalar::from_int(dom, -1);
  switch (which) {
  case Condition::c34:
    value = chi(ga, gb) * chi(E(ga), E(gb)) * inv(ga, E(gb)) * inv(E(ga), gb);
    break;
  case Condition::c35_1: {
    const GroupElement &c = *gc;
    // b + E(bc) and E(b) + b + c as formal degrees.
    value = chi(ga, plus(gb, E(plus(gb, c)))) * inv(ga, plus(plus(E(gb), gb), c));
    required = Scalar::one(dom);
    break;
  }
  case Condition::c35_2: {
    const GroupElement &c = *gc;
    value = chi(gb, E(c)) * chi(ga, E(plus(gb, c))) * inv(plus(ga, gb), E(c));
    required = Scalar::one(dom);
    break;
  }
  case Condition::c35_3: {
    const GroupElement &c = *gc;
    GroupElement omega_ab = E(plus(ga, gb));
    value = chi(plus(ga, gb), c) * chi(omega_ab, E(c)) * inv(plus(ga, gb), E(c));
    break;
  }
  case Condition::c35_4: {
    const GroupElement &c = *gc;
    GroupElement omega_ac = E(plus(ga, c));
    value = chi(ga, gb) * chi(E(gb), c) * chi(omega_ac, E(gb)) * inv(ga, E(gb)) * inv(gb, c);
    break;
  }
  }
  bool ok = value == required;
  return {std::move(value), std::move(required), ok};
}

// ---- c-functions ---------------------------------------------------------

CFunction CFunction::sign_alternating(std::vector<long> functional, ScalarDomain domain) {
  CFunction c;
  c.functional_ = std::move(functional);
  c.domain_ = std::move(domain);
  return c;
}

CFunction CFunction::table(std::map<std::pair<GroupElement, GroupElement>, Scalar> values,
                           ScalarDomain domain) {
  CFunction c;
  c.table_ = std::move(values);
  c.domain_ = std::move(domain);
  c.is_table_ = true;
  return c;
}

Scalar CFunction::operator()(const GroupElement &g, const GroupElement &h) const {
  if (is_table_) {
    auto it = table_.find({g, h});
    return it == table_.end() ? Scalar::zero(domain_) : it->second;
  }
  if (g.dimension() != functional_.size() || h.dimension() != functional_.size())
    throw DimensionMismatch("c-function functional has dimension " +
                            std::to_string(functional_.size()));
  long exponent = 0;
  for (std::size_t i = 0; i < functional_.size(); ++i)
    exponent += functional_[i] * (g.coords[i] + h.coords[i]);
  return Scalar::from_int(domain_, exponent % 2 == 0 ? 1 : -1);
}

AlgebraElement bracket_formal(const GradedLinearMap &D, const CFunction &c,
                              const GroupElement &ga, const AlgebraElement &a,
                              const GroupElement &gb, const AlgebraElement &b, OmegaPath path) {
  Scalar scale = c(ga, gb);
  if (scale.is_zero())
    throw ZeroScalingFunction("c(" + ga.str() + ", " + gb.str() + ") = 0");
  return scale.inverse() * omega2(path, D, a, b);
}

AlgebraElement bracket(const GradedLinearMap &D, const CFunction &c, const AlgebraElement &a,
                       const AlgebraElement &b) {
  const AlgebraSpec &s = D.spec();
  AlgebraElement out;
  for (const auto &[ga, A] : homogeneous_components(s, a))
    for (const auto &[gb, B] : homogeneous_components(s, b))
      out += bracket_formal(D, c, ga, A, gb, B);
  return out;
}

CFunctionVerdict cfun_validate(const CFunction &c, const GroupSpec &group, const GroupElement &e,
                               std::span<const GroupElement> window) {
  CFunctionVerdict verdict;
  for (const auto &g : window) {
    for (const auto &h : window) {
      Scalar v = c(g, h);
      if (v.is_zero() || v != -c(group.add(g, e), h)) {
        verdict.valid = false;
        verdict.violations.push_back({g, h, "shift_first"});
      }
      if (v.is_zero() || v != -c(g, group.add(h, e))) {
        verdict.valid = false;
        verdict.violations.push_back({g, h, "shift_second"});
      }
    }
  }
  return verdict;
}

} // namespace bverify
