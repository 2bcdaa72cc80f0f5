#include "bverify/verify.hpp"

#include "bverify/errors.hpp"

#include <array>

namespace bverify {

namespace {

constexpr std::array<std::pair<SuiteId, std::string_view>, 11> kSuiteNames{{
    {SuiteId::bcomm, "bcomm"},
    {SuiteId::defn_vs_closed2, "defn_vs_closed2"},
    {SuiteId::defn_vs_closed3, "defn_vs_closed3"},
    {SuiteId::lemma31, "lemma31"},
    {SuiteId::lemma32, "lemma32"},
    {SuiteId::lemma33, "lemma33"},
    {SuiteId::jacobi, "jacobi"},
    {SuiteId::leibniz_right, "leibniz_right"},
    {SuiteId::leibniz_paper, "leibniz_paper"},
    {SuiteId::bracket_derivation, "bracket_derivation"},
    {SuiteId::derivation_def22, "derivation_def22"},
}};

} // namespace

std::string to_string(SuiteId id) {
  for (const auto &[s, name] : kSuiteNames)
    if (s == id)
      return std::string(name);
  return "?";
}

std::optional<SuiteId> suite_from_string(std::string_view s) {
  for (const auto &[id, name] : kSuiteNames)
    if (name == s)
      return id;
  return std::nullopt;
}

const std::vector<SuiteId> &all_suites() {
  static const std::vector<SuiteId> ids = [] {
    std::vector<SuiteId> v;
    for (const auto &[id, name] : kSuiteNames)
      v.push_back(id);
    return v;
  }();
  return ids;
}

std::size_t suite_arity(SuiteId id) {
  switch (id) {
  case SuiteId::bcomm:
  case SuiteId::defn_vs_closed2:
  case SuiteId::lemma31:
  case SuiteId::bracket_derivation:
  case SuiteId::derivation_def22:
    return 2;
  default:
    return 3;
  }
}

bool suite_needs_map(SuiteId id) { return id != SuiteId::bcomm; }

bool suite_needs_special_map(SuiteId id) {
  return id == SuiteId::jacobi || id == SuiteId::leibniz_right || id == SuiteId::leibniz_paper ||
         id == SuiteId::bracket_derivation;
}

namespace {

// Suites whose identities are derived under B-commutativity.
bool suite_needs_bcomm(SuiteId id) {
  switch (id) {
  case SuiteId::lemma31:
  case SuiteId::lemma32:
  case SuiteId::lemma33:
  case SuiteId::jacobi:
  case SuiteId::leibniz_right:
  case SuiteId::leibniz_paper:
  case SuiteId::bracket_derivation:
    return true;
  default:
    return false;
  }
}

} // namespace

std::string to_string(Mode m) { return m == Mode::assert_holds ? "assert" : "report"; }

std::string to_string(Status s) {
  switch (s) {
  case Status::holds:
    return "holds";
  case Status::fails:
    return "fails";
  case Status::skipped:
    break;
  }
  return "skipped";
}

const GradedLinearMap &Instance::map(const std::string &name) const {
  auto it = maps.find(name);
  if (it == maps.end())
    throw ValidationError("instance '" + this->name + "' has no map named '" + name + "'");
  return it->second;
}

bool is_b_commutative(const AlgebraSpec &spec) {
  for (std::size_t i = 0; i < spec.generator_count(); ++i)
    for (std::size_t j = i + 1; j < spec.generator_count(); ++j)
      if (!(spec.swap_coefficient(i, j) * spec.swap_coefficient(j, i)).is_one())
        return false;
  return true;
}

std::vector<std::vector<Monomial>> enumerate_tuples(const AlgebraSpec &spec, std::size_t arity,
                                                    const Bounds &bounds) {
  const auto basis = basis_enumerate(spec, std::min(bounds.per_arg, spec.max_len()));
  if (bounds.per_arg > spec.max_len())
    throw TruncationExceeded("per-argument bound " + std::to_string(bounds.per_arg) +
                             " exceeds max_len " + std::to_string(spec.max_len()));
  std::vector<std::vector<Monomial>> out;
  std::vector<Monomial> current;
  auto recurse = [&](auto &self, std::size_t used) -> void {
    if (current.size() == arity) {
      out.push_back(current);
      return;
    }
    for (const auto &m : basis) {
      if (used + m.size() > bounds.total)
        break;  // basis is sorted by length
      current.push_back(m);
      self(self, used + m.size());
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

// ---- per-suite evaluation ------------------------------------------------

namespace {

class SuiteEvaluator {
public:
  SuiteEvaluator(const Instance &instance, const SuiteRequest &request, OmegaPath path)
      : s_(*instance.spec), request_(request), path_(path) {
    if (suite_needs_map(request.suite)) {
      E_ = instance.map(request.map);
      if (request.suite == SuiteId::lemma31 || request.suite == SuiteId::lemma33)
        E2_ = GradedLinearMap::compose(*E_, *E_);
    }
    if (request.suite == SuiteId::bracket_derivation) {
      if (!instance.cfun)
        throw ValidationError("bracket_derivation needs a c-function");
      c_ = &*instance.cfun;
    }
  }

  std::pair<AlgebraElement, AlgebraElement> operator()(const std::vector<Monomial> &t) const {
    if (t.size() != suite_arity(request_.suite))
      throw DimensionMismatch("tuple of size " + std::to_string(t.size()) + " for suite " +
                              to_string(request_.suite));
    switch (request_.suite) {
    case SuiteId::bcomm:
      return bcomm(t[0], t[1]);
    case SuiteId::defn_vs_closed2:
      return {omega2(OmegaPath::definitional, *E_, el(t[0]), el(t[1])),
              omega2(OmegaPath::closed, *E_, el(t[0]), el(t[1]))};
    case SuiteId::defn_vs_closed3:
      return {omega3(OmegaPath::definitional, *E_, el(t[0]), el(t[1]), el(t[2])),
              omega3(OmegaPath::closed, *E_, el(t[0]), el(t[1]), el(t[2]))};
    case SuiteId::lemma31:
      return lemma31(t[0], t[1]);
    case SuiteId::lemma32:
      return lemma32(t[0], t[1], t[2]);
    case SuiteId::lemma33:
      return lemma33(t[0], t[1], t[2]);
    case SuiteId::jacobi:
      return {jacobi(t[0], t[1], t[2]), AlgebraElement{}};
    case SuiteId::leibniz_right:
      return leibniz(t[0], t[1], t[2], false);
    case SuiteId::leibniz_paper:
      return leibniz(t[0], t[1], t[2], true);
    case SuiteId::bracket_derivation:
      return bracket_derivation(t[0], t[1]);
    case SuiteId::derivation_def22:
      return leibniz_sides(*E_, t[0], t[1]);
    }
    throw ValidationError("unknown suite");
  }

private:
  AlgebraElement el(const Monomial &m) const {
    return AlgebraElement::term(m, Scalar::one(s_.domain()));
  }
  GroupElement deg(const Monomial &m) const { return s_.degree(m); }
  Scalar chi(const GroupElement &g, const GroupElement &h) const { return s_.chi()(g, h); }
  GroupElement add(const GroupElement &g, const GroupElement &h) const {
    return s_.group().add(g, h);
  }
  /// Formal degree of E(x) for x of degree g.
  GroupElement Edeg(const GroupElement &g) const { return E_->image_degree(g); }
  AlgebraElement mul(const AlgebraElement &a, const AlgebraElement &b) const {
    return multiply(s_, a, b);
  }
  AlgebraElement om2(const GradedLinearMap &E, const AlgebraElement &a,
                     const AlgebraElement &b) const {
    return omega2(path_, E, a, b);
  }
  AlgebraElement om3(const GradedLinearMap &E, const AlgebraElement &a, const AlgebraElement &b,
                     const AlgebraElement &c) const {
    return omega3(path_, E, a, b, c);
  }

  std::pair<AlgebraElement, AlgebraElement> bcomm(const Monomial &a, const Monomial &b) const {
    return {mul(el(a), el(b)), chi(deg(a), deg(b)) * mul(el(b), el(a))};
  }

  // Omega^2_{E^2}(a,b) = E Omega^2_E(a,b) + Omega^2_E(E(a),b)
  //                      + chi(a,b) chi(a,E(b))^-1 Omega^2_E(a,E(b))
  std::pair<AlgebraElement, AlgebraElement> lemma31(const Monomial &ma,
                                                    const Monomial &mb) const {
    const auto &E = *E_;
    auto a = el(ma), b = el(mb);
    auto ga = deg(ma), gb = deg(mb);
    AlgebraElement lhs = om2(*E2_, a, b);
    AlgebraElement rhs = E(om2(E, a, b)) + om2(E, E(a), b) +
                         chi(ga, gb) * chi(ga, Edeg(gb)).inverse() * om2(E, a, E(b));
    return {std::move(lhs), std::move(rhs)};
  }

  // Omega^3_E(a,b,c) = Omega^2_E(a,bc) - Omega^2_E(a,b) c - chi(b,c) Omega^2_E(a,c) b
  std::pair<AlgebraElement, AlgebraElement> lemma32(const Monomial &ma, const Monomial &mb,
                                                    const Monomial &mc) const {
    const auto &E = *E_;
    auto a = el(ma), b = el(mb), c = el(mc);
    AlgebraElement lhs = om3(E, a, b, c);
    AlgebraElement rhs = om2(E, a, mul(b, c)) - mul(om2(E, a, b), c) -
                         chi(deg(mb), deg(mc)) * mul(om2(E, a, c), b);
    return {std::move(lhs), std::move(rhs)};
  }

  // Omega^2(Omega^2(a,b),c) + chi(b,c) Omega^2(Omega^2(a,c),b)
  //   + chi(a,b+c) chi(a,E(bc))^-1 Omega^2(a,Omega^2(b,c))
  AlgebraElement jacobi_sum(const Monomial &ma, const Monomial &mb, const Monomial &mc) const {
    const auto &E = *E_;
    auto a = el(ma), b = el(mb), c = el(mc);
    auto ga = deg(ma), gb = deg(mb), gc = deg(mc);
    GroupElement gbc = add(gb, gc);
    return om2(E, om2(E, a, b), c) + chi(gb, gc) * om2(E, om2(E, a, c), b) +
           chi(ga, gbc) * chi(ga, Edeg(gbc)).inverse() * om2(E, a, om2(E, b, c));
  }

  // jacobi_sum = Omega^3_{E^2}(a,b,c) - E Omega^3_E(a,b,c) - Omega^3_E(E(a),b,c)
  //   - chi(a,b) chi(a,E(b))^-1 Omega^3_E(a,E(b),c)
  //   - chi(a+b,c) chi(a+b,E(c))^-1 Omega^3_E(a,b,E(c))
  std::pair<AlgebraElement, AlgebraElement> lemma33(const Monomial &ma, const Monomial &mb,
                                                    const Monomial &mc) const {
    const auto &E = *E_;
    auto a = el(ma), b = el(mb), c = el(mc);
    auto ga = deg(ma), gb = deg(mb), gc = deg(mc);
    GroupElement gab = add(ga, gb);
    AlgebraElement rhs = om3(*E2_, a, b, c) - E(om3(E, a, b, c)) - om3(E, E(a), b, c) -
                         chi(ga, gb) * chi(ga, Edeg(gb)).inverse() * om3(E, a, E(b), c) -
                         chi(gab, gc) * chi(gab, Edeg(gc)).inverse() * om3(E, a, b, E(c));
    return {jacobi_sum(ma, mb, mc), std::move(rhs)};
  }

  AlgebraElement jacobi(const Monomial &ma, const Monomial &mb, const Monomial &mc) const {
    return jacobi_sum(ma, mb, mc);
  }

  // Right-multiplied form:  Omega^2(a,bc) = Omega^2(a,b) c + chi(b,c) Omega^2(a,c) b.
  // As printed:             Omega^2(a,bc) = Omega^2(a,b) c
  //                           + chi(b,c) chi(Omega^2(a,c), b)^-1 b Omega^2(a,c).
  std::pair<AlgebraElement, AlgebraElement> leibniz(const Monomial &ma, const Monomial &mb,
                                                    const Monomial &mc, bool as_printed) const {
    const auto &E = *E_;
    auto a = el(ma), b = el(mb), c = el(mc);
    auto ga = deg(ma), gb = deg(mb), gc = deg(mc);
    AlgebraElement lhs = om2(E, a, mul(b, c));
    AlgebraElement oac = om2(E, a, c);
    AlgebraElement second;
    if (as_printed) {
      GroupElement g_oac = Edeg(add(ga, gc));
      second = chi(gb, gc) * chi(g_oac, gb).inverse() * mul(b, oac);
    } else {
      second = chi(gb, gc) * mul(oac, b);
    }
    return {std::move(lhs), mul(om2(E, a, b), c) + second};
  }

  // D[a,b] = [D(a),b] + chi(a,b) chi(a,D(b))^-1 [a,D(b)]
  std::pair<AlgebraElement, AlgebraElement> bracket_derivation(const Monomial &ma,
                                                               const Monomial &mb) const {
    const auto &D = *E_;
    auto a = el(ma), b = el(mb);
    auto ga = deg(ma), gb = deg(mb);
    AlgebraElement lhs = D(bracket_formal(D, *c_, ga, a, gb, b, path_));
    AlgebraElement rhs =
        bracket_formal(D, *c_, Edeg(ga), D(a), gb, b, path_) +
        chi(ga, gb) * chi(ga, Edeg(gb)).inverse() *
            bracket_formal(D, *c_, ga, a, Edeg(gb), D(b), path_);
    return {std::move(lhs), std::move(rhs)};
  }

  const AlgebraSpec &s_;
  const SuiteRequest &request_;
  OmegaPath path_;
  std::optional<GradedLinearMap> E_;
  std::optional<GradedLinearMap> E2_;
  const CFunction *c_ = nullptr;
};

Verdict skipped(Verdict v, std::string reason) {
  v.status = Status::skipped;
  v.reason = std::move(reason);
  return v;
}

std::string render_tuple(const AlgebraSpec &spec, const std::vector<Monomial> &t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? ", " : "") + spec.render(t[i]);
  return s + ")";
}

} // namespace

std::pair<AlgebraElement, AlgebraElement> evaluate_case(const Instance &instance,
                                                        const SuiteRequest &request,
                                                        const std::vector<Monomial> &tuple,
                                                        OmegaPath path) {
  SuiteEvaluator eval(instance, request, path);
  return eval(tuple);
}

bool reverify_failure(const Instance &instance, const SuiteRequest &request,
                      const Failure &failure, OmegaPath path) {
  auto [lhs, rhs] = evaluate_case(instance, request, failure.inputs, path);
  return lhs != rhs && lhs == failure.lhs && rhs == failure.rhs;
}

Verdict run_suite(const Instance &instance, const SuiteRequest &request, OmegaPath path) {
  Verdict v;
  v.suite = request.suite;
  v.instance = instance.name;
  v.map = request.map;
  v.mode = request.mode;
  v.bounds = request.bounds;
  const AlgebraSpec &spec = *instance.spec;

  if (suite_needs_map(request.suite) && !instance.maps.contains(request.map))
    return skipped(std::move(v), "unknown map '" + request.map + "'");
  if (request.suite == SuiteId::bracket_derivation && !instance.cfun)
    return skipped(std::move(v), "no c-function configured");
  if (request.mode == Mode::assert_holds && suite_needs_bcomm(request.suite) &&
      !is_b_commutative(spec))
    return skipped(std::move(v), "instance is not B-commutative; refusing assert mode");

  std::vector<std::vector<Monomial>> tuples;
  try {
    if (suite_needs_special_map(request.suite)) {
      PrecheckReport pre = precheck_special_map(instance, request.map, request.bounds);
      if (!pre.all_hold()) {
        std::string why;
        if (!pre.d_of_one.holds)
          why += " D(1) != 0;";
        if (!pre.d_squared.holds)
          why += " D^2 != 0;";
        if (!pre.omega3_zero.holds)
          why += " Omega^3_D != 0;";
        why.pop_back();
        return skipped(std::move(v), "special-map precheck failed:" + why);
      }
    }
    tuples = enumerate_tuples(spec, suite_arity(request.suite), request.bounds);
  } catch (const TruncationExceeded &e) {
    return skipped(std::move(v), std::string("bound too small: ") + e.what());
  } catch (const OutOfBasis &e) {
    return skipped(std::move(v), std::string("bound too small: ") + e.what());
  }

  SuiteEvaluator eval(instance, request, path);
  for (const auto &t : tuples) {
    try {
      auto [lhs, rhs] = eval(t);
      ++v.cases_checked;
      if (lhs != rhs)
        v.failures.push_back({t, std::move(lhs), std::move(rhs)});
    } catch (const TruncationExceeded &e) {
      v.failures.clear();
      return skipped(std::move(v), "bound too small at " + render_tuple(spec, t) + ": " +
                                       e.what());
    } catch (const OutOfBasis &e) {
      v.failures.clear();
      return skipped(std::move(v), "bound too small at " + render_tuple(spec, t) + ": " +
                                       e.what());
    }
  }
  if (v.cases_checked == 0)
    return skipped(std::move(v), "no tuples within bounds");
  v.status = v.failures.empty() ? Status::holds : Status::fails;
  return v;
}

PrecheckReport precheck_special_map(const Instance &instance, const std::string &map,
                                    const Bounds &bounds) {
  const GradedLinearMap &D = instance.map(map);
  const AlgebraSpec &spec = *instance.spec;
  PrecheckReport r;
  r.map = map;

  AlgebraElement d1 = D.apply(Monomial::unit());
  r.d_of_one.cases_checked = 1;
  if (!d1.is_zero()) {
    r.d_of_one.holds = false;
    r.d_of_one.witness = std::vector<Monomial>{Monomial::unit()};
    r.d_of_one.witness_value = d1;
  }

  for (const auto &m : basis_enumerate(spec, spec.max_len())) {
    ++r.d_squared.cases_checked;
    AlgebraElement dd = D(D.apply(m));
    if (!dd.is_zero()) {
      r.d_squared.holds = false;
      r.d_squared.witness = std::vector<Monomial>{m};
      r.d_squared.witness_value = std::move(dd);
      break;
    }
  }

  const ScalarDomain &dom = spec.domain();
  for (const auto &t : enumerate_tuples(spec, 3, bounds)) {
    ++r.omega3_zero.cases_checked;
    AlgebraElement w = omega3_closed(D, AlgebraElement::term(t[0], Scalar::one(dom)),
                                     AlgebraElement::term(t[1], Scalar::one(dom)),
                                     AlgebraElement::term(t[2], Scalar::one(dom)));
    if (!w.is_zero()) {
      r.omega3_zero.holds = false;
      r.omega3_zero.witness = t;
      r.omega3_zero.witness_value = std::move(w);
      break;
    }
  }
  return r;
}

} // namespace bverify
