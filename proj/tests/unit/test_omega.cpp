#include "bverify/errors.hpp"
#include "bverify/omega.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace bverify;
using namespace bvtest;

namespace {

AlgebraElement one_of(const AlgebraSpecPtr &spec) { return AlgebraElement::unit(spec->domain()); }

GroupElement deg(long n) { return GroupElement({n}); }

// ---- maps ------------------------------------------------------------------

TEST(Derivation, GrassmannPartialWithSign) {
  auto g = gr4();
  EXPECT_EQ(partial(g, 1)(E(g, "x1*x2")), E(g, "-x1"));
}

TEST(Derivation, GrassmannPartialsMatchSignOracle) {
  auto g = gr4();
  for (std::size_t i = 0; i < 4; ++i) {
    auto d = partial(g, i);
    for (const auto &m : basis_enumerate(*g, 4))
      EXPECT_EQ(d.apply(m), grassmann_partial(*g, m, static_cast<Monomial::Index>(i)))
          << "d" << i + 1 << " on " << g->render(m);
  }
}

TEST(Derivation, QuantumPlanePartials) {
  auto p = qp();
  auto dx = partial(p, 0), dy = partial(p, 1);
  EXPECT_EQ(dx(E(p, "x*y")), E(p, "y"));
  EXPECT_EQ(dx(E(p, "y*x")), E(p, "q^-1*y"));
  for (const auto &m : basis_enumerate(*p, 6)) {
    EXPECT_EQ(dx.apply(m), plane_partial(*p, m, 0)) << p->render(m);
    EXPECT_EQ(dy.apply(m), plane_partial(*p, m, 1)) << p->render(m);
  }
}

TEST(Derivation, ZeroValuesGiveZeroMap) {
  auto g = gr4();
  auto z = GradedLinearMap::derivation(g, {}, deg(-1));
  for (const auto &m : basis_enumerate(*g, 4))
    EXPECT_TRUE(z.apply(m).is_zero());
}

TEST(Derivation, RejectsInhomogeneousValues) {
  auto g = gr4();
  EXPECT_THROW(GradedLinearMap::derivation(g, {{0, E(g, "1 + x2*x3")}}, deg(-1)),
               InhomogeneousRule);
  EXPECT_THROW(GradedLinearMap::derivation(g, {{0, E(g, "x2")}}, deg(-1)), InhomogeneousRule);
}

TEST(LinearMaps, CompositeExamples) {
  auto inst = gr4_instance();
  auto g = inst.spec;
  const auto &D = inst.map("D_odd");
  EXPECT_EQ(D.degree(), deg(-1));
  EXPECT_EQ(D(E(g, "x2*x3")), E(g, "x1"));
  EXPECT_EQ(D(E(g, "x2*x3*x4")), E(g, "x1*x4"));
  EXPECT_TRUE(D(E(g, "x2")).is_zero());
  EXPECT_TRUE(D(one_of(g)).is_zero());
  for (const auto &m : basis_enumerate(*g, 4))
    EXPECT_TRUE(D(D.apply(m)).is_zero()) << g->render(m);
  auto id = GradedLinearMap::identity(g);
  for (const auto &[name, map] : inst.maps)
    for (const auto &m : basis_enumerate(*g, 4)) {
      EXPECT_EQ(compose(map, id).apply(m), map.apply(m)) << name;
      EXPECT_EQ(compose(id, map).apply(m), map.apply(m)) << name;
    }
  EXPECT_EQ(inst.map("D_even").degree(), deg(-2));
}

TEST(LinearMaps, SumScaleAndDegreeBookkeeping) {
  auto g = gr4();
  auto d1 = partial(g, 0), d2 = partial(g, 1);
  auto s = GradedLinearMap::sum(d1, GradedLinearMap::scale(S(QQ(), "3"), d2));
  EXPECT_EQ(s(E(g, "x1*x2")), E(g, "x2 - 3*x1"));
  EXPECT_THROW(GradedLinearMap::sum(d1, compose(d1, d2)), InhomogeneousRule);
  EXPECT_THROW(GradedLinearMap::left_multiply(g, E(g, "x1 + 1")), InhomogeneousRule);
  EXPECT_THROW(GradedLinearMap::left_multiply(g, AlgebraElement{}), InhomogeneousRule);
  auto zero_mul = GradedLinearMap::left_multiply(g, AlgebraElement{}, deg(3));
  EXPECT_EQ(zero_mul.degree(), deg(3));
  EXPECT_EQ(lmul(g, "x1*x2").image_degree(deg(1)), deg(3));
}

TEST(LinearMaps, TableMapsCheckHomogeneityAndTruncation) {
  auto g = gr4();
  std::map<Monomial, AlgebraElement> bad{{M(g, "x1"), E(g, "1 + x2*x3")}};
  EXPECT_THROW(GradedLinearMap::from_table(g, deg(-1), bad), InhomogeneousRule);
  std::map<Monomial, AlgebraElement> wrong_degree{{M(g, "x1"), E(g, "x2")}};
  EXPECT_THROW(GradedLinearMap::from_table(g, deg(-1), wrong_degree), InhomogeneousRule);
  auto p = qp(2);
  std::map<Monomial, AlgebraElement> too_long{{Monomial({0, 0, 0}), one_of(p)}};
  EXPECT_THROW(GradedLinearMap::from_table(p, GroupElement({-3, 0}), too_long), Error);
  auto dx = partial(p, 0);
  EXPECT_THROW(dx.apply(Monomial({0, 0, 0})), OutOfBasis);
}

// ---- Omega -----------------------------------------------------------------

TEST(Omega, FirstFormIsMapMinusUnitTerm) {
  auto inst = gr4_instance();
  auto g = inst.spec;
  std::vector<GradedLinearMap> maps{inst.map("D_odd"), lmul(g, "x1"),
                                    GradedLinearMap::identity(g), lmul(g, "x3*x4")};
  for (const auto &E1 : maps)
    for (const auto &m : basis_enumerate(*g, 4)) {
      AlgebraElement a = basis_element(*g, m);
      std::vector<AlgebraElement> args{a};
      EXPECT_EQ(omega_n(E1, args), E1(a) - multiply(*g, E1(one_of(g)), a));
    }
}

TEST(Omega, Examples) {
  auto inst = gr4_instance();
  auto g = inst.spec;
  const auto &D = inst.map("D_odd");
  std::vector<AlgebraElement> args{E(g, "x2"), E(g, "x3")};
  EXPECT_EQ(omega_n(D, args), E(g, "x1"));
  EXPECT_EQ(omega2_closed(D, E(g, "x2"), E(g, "x3")), E(g, "x1"));
  EXPECT_EQ(omega2_closed(D, E(g, "x2*x3"), E(g, "x2*x3")), E(g, "-2*x1*x2*x3"));
  for (const auto &E1 : {D, lmul(g, "x1"), GradedLinearMap::identity(g)})
    EXPECT_TRUE(omega2_closed(E1, one_of(g), one_of(g)).is_zero());
  EXPECT_TRUE(omega3_closed(D, one_of(g), one_of(g), one_of(g)).is_zero());
}

TEST(Omega, ThirdFormVanishesForSecondOrderMaps) {
  auto inst = gr4_instance();
  auto g = inst.spec;
  auto basis = basis_enumerate(*g, 4);
  for (const char *name : {"D_odd", "D_even"}) {
    const auto &D = inst.map(name);
    for (const auto &a : basis)
      for (const auto &b : basis)
        for (const auto &c : basis) {
          std::vector<AlgebraElement> args{basis_element(*g, a), basis_element(*g, b),
                                           basis_element(*g, c)};
          EXPECT_TRUE(omega_n(D, args).is_zero()) << name;
        }
  }
}

// Master property: the closed expansions agree with the defining composite.
void check_definitional_agreement(const Instance &inst, std::size_t per_arg, bool triples) {
  auto spec = inst.spec;
  auto basis = basis_enumerate(*spec, per_arg);
  std::vector<GradedLinearMap> maps;
  for (const auto &[name, m] : inst.maps)
    maps.push_back(m);
  maps.push_back(GradedLinearMap::identity(spec));
  maps.push_back(GradedLinearMap::left_multiply(spec, basis_element(*spec, basis[1])));
  for (const auto &E1 : maps)
    for (const auto &a : basis)
      for (const auto &b : basis) {
        auto ea = basis_element(*spec, a), eb = basis_element(*spec, b);
        if (a.size() + b.size() > spec->max_len())
          continue;
        std::vector<AlgebraElement> two{ea, eb};
        ASSERT_EQ(omega2_closed(E1, ea, eb), omega_n(E1, two)) << E1.describe();
        if (!triples)
          continue;
        for (const auto &c : basis) {
          if (a.size() + b.size() + c.size() > spec->max_len())
            continue;
          auto ec = basis_element(*spec, c);
          std::vector<AlgebraElement> three{ea, eb, ec};
          ASSERT_EQ(omega3_closed(E1, ea, eb, ec), omega_n(E1, three)) << E1.describe();
        }
      }
}

TEST(Omega, ClosedFormsMatchDefinitionOnGrassmann) {
  check_definitional_agreement(gr4_instance(), 4, true);
}

TEST(Omega, ClosedFormsMatchDefinitionOnQuantumPlane) {
  check_definitional_agreement(qp_instance(7), 2, true);
}

TEST(Omega, Multilinear) {
  std::mt19937 rng(8080);
  for (const auto &inst : {gr4_instance(), qp_instance()}) {
    auto spec = inst.spec;
    auto basis = basis_enumerate(*spec, 2);
    for (const auto &[name, D] : inst.maps) {
      for (int i = 0; i < 20; ++i) {
        AlgebraElement a1 = random_homogeneous(rng, *spec, basis);
        AlgebraElement a2 = random_homogeneous(rng, *spec, basis);
        AlgebraElement b = random_homogeneous(rng, *spec, basis);
        AlgebraElement c = random_homogeneous(rng, *spec, basis);
        Scalar s = random_scalar(rng, spec->domain());
        AlgebraElement mix = a1 + s * a2;
        EXPECT_EQ(omega2_closed(D, mix, b), omega2_closed(D, a1, b) + s * omega2_closed(D, a2, b));
        EXPECT_EQ(omega2_closed(D, b, mix), omega2_closed(D, b, a1) + s * omega2_closed(D, b, a2));
        std::vector<AlgebraElement> lhs{b, mix, c}, r1{b, a1, c}, r2{b, a2, c};
        EXPECT_EQ(omega_n(D, lhs), omega_n(D, r1) + s * omega_n(D, r2)) << name;
      }
    }
  }
}

TEST(Omega, OutputIsHomogeneous) {
  for (const auto &inst : {gr4_instance(), qp_instance()}) {
    auto spec = inst.spec;
    const auto &g = spec->group();
    auto basis = basis_enumerate(*spec, 2);
    for (const auto &[name, D] : inst.maps)
      for (const auto &a : basis)
        for (const auto &b : basis) {
          AlgebraElement w = omega2_closed(D, basis_element(*spec, a), basis_element(*spec, b));
          for (const auto &[m, c] : w.terms())
            EXPECT_EQ(spec->degree(m),
                      g.add(g.add(spec->degree(a), spec->degree(b)), D.degree()));
        }
  }
}

TEST(Omega, SecondFormOfDerivationsVanishes) {
  auto g = gr4_instance();
  auto p = qp_instance();
  std::vector<std::pair<AlgebraSpecPtr, GradedLinearMap>> cases{
      {g.spec, g.map("d1")}, {g.spec, g.map("d2")}, {g.spec, g.map("d3")},
      {g.spec, g.map("d4")}, {p.spec, p.map("dx")}, {p.spec, p.map("dy")}};
  for (const auto &[spec, d] : cases) {
    ASSERT_TRUE(check_braided_derivation(d, spec->max_len()).holds);
    auto basis = basis_enumerate(*spec, 3);
    for (const auto &a : basis)
      for (const auto &b : basis)
        EXPECT_TRUE(
            omega2_closed(d, basis_element(*spec, a), basis_element(*spec, b)).is_zero());
  }
}

// ---- braided derivation check ----------------------------------------------

TEST(LeibnizCheck, Examples) {
  auto p = qp();
  auto v = check_braided_derivation(partial(p, 0), 6);
  EXPECT_TRUE(v.holds);
  EXPECT_GT(v.pairs_checked, 0u);
  auto g = gr4();
  EXPECT_TRUE(check_braided_derivation(GradedLinearMap::zero(g, deg(-1)), 4).holds);
  auto table = GradedLinearMap::from_table(g, deg(-1), {{M(g, "x1"), one_of(g)}});
  auto bad = check_braided_derivation(table, 4);
  EXPECT_FALSE(bad.holds);
  ASSERT_FALSE(bad.failures.empty());
  EXPECT_EQ(bad.failures[0].a, M(g, "x1"));
  EXPECT_EQ(bad.failures[0].b, M(g, "x2"));
  EXPECT_TRUE(bad.failures[0].lhs.is_zero());
  EXPECT_EQ(bad.failures[0].rhs, E(g, "x2"));
}

// ---- conditions ------------------------------------------------------------

TEST(Conditions, Examples) {
  auto g = gr4();
  const auto &chi = g->chi();
  auto c = condition_eval(Condition::c34, chi, deg(-1), deg(3), deg(2));
  EXPECT_TRUE(c.value.is_minus_one());
  EXPECT_TRUE(c.satisfied);
  auto zero_e = condition_eval(Condition::c34, chi, deg(0), deg(1), deg(1));
  EXPECT_TRUE(zero_e.value.is_one());
  EXPECT_FALSE(zero_e.satisfied);
  auto even = condition_eval(Condition::c34, chi, deg(-2), deg(1), deg(2));
  EXPECT_TRUE(even.value.is_one());
  EXPECT_FALSE(even.satisfied);
  auto c351 = condition_eval(Condition::c35_1, chi, deg(-1), deg(1), deg(2), deg(3));
  EXPECT_TRUE(c351.value.is_one());
  EXPECT_TRUE(c351.satisfied);
  auto c352 = condition_eval(Condition::c35_2, chi, deg(-1), deg(1), deg(1), deg(1));
  EXPECT_TRUE(c352.value.is_minus_one());
  EXPECT_TRUE(c352.required.is_one());
  EXPECT_FALSE(c352.satisfied);
  EXPECT_EQ(condition_from_string("c35_3"), Condition::c35_3);
  EXPECT_EQ(to_string(Condition::c34), "c34");
  EXPECT_FALSE(condition_from_string("c36"));
}

// chi(a,b) chi(Ea,Eb) chi(a,Eb)^-1 chi(Ea,b)^-1 evaluated factor by factor.
Scalar c34_oracle(const Bicharacter &chi, const GroupSpec &G, const GroupElement &e,
                  const GroupElement &a, const GroupElement &b) {
  GroupElement Ea = G.add(a, e), Eb = G.add(b, e);
  return chi_by_products(chi, a, b) * chi_by_products(chi, Ea, Eb) /
         chi_by_products(chi, a, Eb) / chi_by_products(chi, Ea, b);
}

TEST(Conditions, C34CollapsesToChiOfShift) {
  std::mt19937 rng(77);
  for (auto spec : {gr4(), qp(), ns(), z4()}) {
    const auto &G = spec->group();
    const auto &chi = spec->chi();
    for (int round = 0; round < 3; ++round) {
      GroupElement e = random_degree(rng, G, 2);
      for (int i = 0; i < 100; ++i) {
        auto a = random_degree(rng, G), b = random_degree(rng, G);
        Scalar v = condition_eval(Condition::c34, chi, e, a, b).value;
        EXPECT_EQ(v, c34_oracle(chi, G, e, a, b));
        EXPECT_EQ(v, chi(e, e));
      }
    }
  }
}

TEST(Conditions, C352SimplifiesToChiOfArguments) {
  std::mt19937 rng(78);
  for (auto spec : {gr4(), qp(), z4()}) {
    const auto &G = spec->group();
    for (int i = 0; i < 50; ++i) {
      auto e = random_degree(rng, G, 2), a = random_degree(rng, G), b = random_degree(rng, G),
           c = random_degree(rng, G);
      EXPECT_EQ(condition_eval(Condition::c35_2, spec->chi(), e, a, b, c).value,
                spec->chi()(a, b));
      EXPECT_TRUE(condition_eval(Condition::c35_1, spec->chi(), e, a, b, c).value.is_one());
    }
  }
}

// ---- c-functions and the bracket ------------------------------------------

std::vector<GroupElement> window(long lo, long hi) {
  std::vector<GroupElement> w;
  for (long i = lo; i <= hi; ++i)
    w.push_back(deg(i));
  return w;
}

TEST(CFunction, Validation) {
  GroupSpec z(1, {});
  auto w = window(-3, 4);
  auto sign = CFunction::sign_alternating({1}, QQ());
  EXPECT_TRUE(cfun_validate(sign, z, deg(-1), w).valid);
  auto constant = CFunction::sign_alternating({0}, QQ());
  auto bad = cfun_validate(constant, z, deg(-1), w);
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.violations.size(), 2 * w.size() * w.size());
  EXPECT_FALSE(cfun_validate(sign, z, deg(0), w).valid);
  EXPECT_EQ(cfun_validate(sign, z, deg(0), w).violations.size(), 2 * w.size() * w.size());
}

TEST(Bracket, Examples) {
  auto inst = gr4_instance();
  auto g = inst.spec;
  const auto &D = inst.map("D_odd");
  auto unit_c = CFunction::sign_alternating({0}, QQ());
  auto basis = basis_enumerate(*g, 2);
  for (const auto &a : basis)
    for (const auto &b : basis) {
      auto ea = basis_element(*g, a), eb = basis_element(*g, b);
      EXPECT_EQ(bracket(D, unit_c, ea, eb), omega2_closed(D, ea, eb));
      EXPECT_TRUE(bracket(D, *inst.cfun, one_of(g), eb).is_zero());
    }
  EXPECT_EQ(bracket(D, *inst.cfun, E(g, "x2"), E(g, "x3")), E(g, "x1"));
  EXPECT_EQ(bracket(D, *inst.cfun, E(g, "x2*x3"), E(g, "x2*x3")), E(g, "-2*x1*x2*x3"));
  EXPECT_EQ(bracket(D, *inst.cfun, E(g, "x2"), E(g, "x2*x3")),
            S(QQ(), "-1") * omega2_closed(D, E(g, "x2"), E(g, "x2*x3")));
  auto empty = CFunction::table({}, QQ());
  EXPECT_THROW(bracket(D, empty, E(g, "x2"), E(g, "x3")), ZeroScalingFunction);
}

} // namespace
