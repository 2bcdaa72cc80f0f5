#include "bverify/algebra.hpp"
#include "bverify/errors.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace bverify;
using namespace bvtest;

namespace {

using Word = std::vector<Monomial::Index>;

std::optional<NormalForm> norm(const AlgebraSpecPtr &spec, Word w) {
  return normalize_word(*spec, w);
}

TEST(NormalForm, GrassmannSwap) {
  auto spec = gr4();
  auto nf = norm(spec, {1, 0});
  ASSERT_TRUE(nf);
  EXPECT_EQ(nf->coefficient, S(QQ(), "-1"));
  EXPECT_EQ(nf->monomial, Monomial({0, 1}));
}

TEST(NormalForm, GrassmannSquareVanishes) { EXPECT_FALSE(norm(gr4(), {0, 0})); }

TEST(NormalForm, QuantumPlane) {
  auto spec = qp();
  auto yx = norm(spec, {1, 0});
  ASSERT_TRUE(yx);
  EXPECT_EQ(yx->coefficient, S(QQ_q(), "q^-1"));
  EXPECT_EQ(yx->monomial, Monomial({0, 1}));
  auto xx = norm(spec, {0, 0});
  ASSERT_TRUE(xx);
  EXPECT_TRUE(xx->coefficient.is_one());
  EXPECT_EQ(xx->monomial, Monomial({0, 0}));
}

TEST(NormalForm, Truncation) {
  auto spec = qp(2);
  EXPECT_THROW(norm(spec, {0, 0, 0}), TruncationExceeded);
  // Vanishing words are allowed past the bound.
  EXPECT_FALSE(norm(gr4(2), {0, 1, 0}));
  EXPECT_THROW(norm(gr4(2), {0, 1, 2}), TruncationExceeded);
}

TEST(NormalForm, GrassmannMatchesPermutationSignOracle) {
  auto spec = gr4();
  std::size_t checked = 0;
  for (std::size_t len = 0; len <= 4; ++len) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < len; ++i)
      count *= 4;
    for (std::size_t code = 0; code < count; ++code) {
      Word w;
      for (std::size_t i = 0, c = code; i < len; ++i, c /= 4)
        w.push_back(static_cast<Monomial::Index>(c % 4));
      auto expected = grassmann_word(w);
      auto got = norm(spec, w);
      ASSERT_EQ(got.has_value(), expected.has_value());
      if (got) {
        EXPECT_EQ(got->coefficient, Scalar::from_int(QQ(), expected->first));
        EXPECT_EQ(got->monomial.indices(), expected->second);
      }
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1u + 4 + 16 + 64 + 256);
}

TEST(NormalForm, QuantumPlaneMatchesInversionOracle) {
  auto spec = qp();
  for (std::size_t len = 0; len <= 6; ++len)
    for (std::size_t code = 0; code < (1u << len); ++code) {
      Word w;
      for (std::size_t i = 0; i < len; ++i)
        w.push_back(static_cast<Monomial::Index>((code >> i) & 1));
      auto [k, sorted] = quantum_plane_word(w);
      auto got = norm(spec, w);
      ASSERT_TRUE(got);
      EXPECT_EQ(got->coefficient, q_power(k));
      EXPECT_EQ(got->monomial.indices(), sorted);
    }
}

TEST(NormalForm, Idempotent) {
  for (auto spec : {gr4(), qp(), z4()}) {
    for (const auto &m : basis_enumerate(*spec, spec->max_len())) {
      auto nf = normalize_word(*spec, m.indices());
      ASSERT_TRUE(nf);
      EXPECT_TRUE(nf->coefficient.is_one());
      EXPECT_EQ(nf->monomial, m);
    }
  }
}

TEST(Multiply, Examples) {
  auto g = gr4();
  EXPECT_TRUE(multiply(*g, E(g, "x1*x2"), E(g, "x2*x3")).is_zero());
  EXPECT_EQ(multiply(*g, E(g, "x1*x3"), E(g, "x2")), E(g, "-x1*x2*x3"));
  auto p = qp();
  EXPECT_EQ(multiply(*p, E(p, "x*y"), E(p, "x")), E(p, "q^-1*x*x*y"));
  EXPECT_EQ(multiply(*p, E(p, "x*y"), E(p, "x")).str(*p), "(1/q)*x*x*y");
}

TEST(Multiply, UnitAndDistributivity) {
  auto p = qp();
  AlgebraElement one = AlgebraElement::unit(p->domain());
  AlgebraElement a = E(p, "x + q*y*y"), b = E(p, "y - 2"), c = E(p, "x*y + 1/2");
  EXPECT_EQ(multiply(*p, one, a), a);
  EXPECT_EQ(multiply(*p, a, one), a);
  EXPECT_EQ(multiply(*p, a, b + c), multiply(*p, a, b) + multiply(*p, a, c));
  EXPECT_EQ(multiply(*p, a + b, c), multiply(*p, a, c) + multiply(*p, b, c));
  EXPECT_THROW(multiply(*qp(2), E(p, "x*x"), E(p, "y")), TruncationExceeded);
}

TEST(Multiply, AssociativeOnRandomTriples) {
  std::mt19937 rng(31337);
  for (auto spec : {gr4(), qp(6), z4(6)}) {
    auto basis = basis_enumerate(*spec, 2);
    for (int i = 0; i < 300; ++i) {
      AlgebraElement a = basis_element(*spec, random_monomial(rng, basis));
      AlgebraElement b = basis_element(*spec, random_monomial(rng, basis));
      AlgebraElement c = basis_element(*spec, random_monomial(rng, basis));
      EXPECT_EQ(multiply(*spec, multiply(*spec, a, b), c),
                multiply(*spec, a, multiply(*spec, b, c)));
    }
  }
}

TEST(Multiply, DegreeAdditivity) {
  for (auto spec : {gr4(), qp(), z4()}) {
    auto basis = basis_enumerate(*spec, 2);
    const auto &g = spec->group();
    for (const auto &u : basis)
      for (const auto &v : basis) {
        AlgebraElement uv = multiply(*spec, basis_element(*spec, u), basis_element(*spec, v));
        for (const auto &[m, c] : uv.terms())
          EXPECT_EQ(spec->degree(m), g.add(spec->degree(u), spec->degree(v)));
      }
  }
}

TEST(Elements, LinearOperations) {
  auto g = gr4();
  EXPECT_TRUE((E(g, "x1") + E(g, "-x1")).is_zero());
  EXPECT_EQ(S(QQ(), "2") * E(g, "x1*x2"), E(g, "2*x1*x2"));
  EXPECT_TRUE((-AlgebraElement{}).is_zero());
  EXPECT_EQ((S(QQ(), "2") * E(g, "x1*x2")).str(*g), "2*x1*x2");
  EXPECT_EQ(AlgebraElement::unit(QQ()).str(*g), "1");
  EXPECT_EQ(AlgebraElement{}.str(*g), "0");
  EXPECT_TRUE((S(QQ(), "0") * E(g, "x1")).is_zero());
}

TEST(Elements, HomogeneousComponents) {
  auto g = gr4();
  GroupSpec z(1, {});
  auto comps = homogeneous_components(*g, E(g, "x1 + x1*x2"));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps.at(z.make({1})), E(g, "x1"));
  EXPECT_EQ(comps.at(z.make({2})), E(g, "x1*x2"));
  EXPECT_TRUE(homogeneous_components(*g, AlgebraElement{}).empty());
  EXPECT_EQ(homogeneous_components(*g, E(g, "x1*x2 - x3*x4")).size(), 1u);
  EXPECT_EQ(homogeneous_degree(*g, E(g, "x1*x2 - x3*x4")), z.make({2}));
  EXPECT_FALSE(homogeneous_degree(*g, E(g, "1 + x1")));
}

TEST(Elements, ParseAndRender) {
  auto p = qp();
  AlgebraElement a = E(p, "y*x - (q+1)*x + 1/2");
  EXPECT_EQ(a, E(p, "1/2 - (1+q)*x + 1/q*x*y"));
  EXPECT_EQ(E(p, a.str(*p)), a);
  EXPECT_EQ(E(p, "x*y/q"), E(p, "q^-1*x*y"));
  EXPECT_THROW(E(p, "z"), ParseError);
  EXPECT_THROW(E(p, "1/x"), ParseError);
  EXPECT_THROW(E(p, "x^-1"), ParseError);
}

TEST(Basis, Counts) {
  auto g = gr4();
  auto b = basis_enumerate(*g, 4);
  EXPECT_EQ(b.size(), grassmann_basis_count(4, 4));
  EXPECT_EQ(b.size(), 16u);
  auto p = qp();
  auto pb = basis_enumerate(*p, 2);
  std::vector<std::string> rendered;
  for (const auto &m : pb)
    rendered.push_back(p->render(m));
  EXPECT_EQ(rendered, (std::vector<std::string>{"1", "x", "y", "x*x", "x*y", "y*y"}));
  for (std::size_t L = 0; L <= 6; ++L)
    EXPECT_EQ(basis_enumerate(*p, L).size(), plane_basis_count(L));
  for (auto spec : {gr4(), qp(), z4()})
    EXPECT_EQ(basis_enumerate(*spec, 0), std::vector<Monomial>{Monomial::unit()});
  EXPECT_THROW(basis_enumerate(*g, 5), TruncationExceeded);
}

TEST(Basis, OrderedByLengthThenLex) {
  for (auto spec : {gr4(), qp(), z4()}) {
    auto b = basis_enumerate(*spec, spec->max_len());
    EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
    EXPECT_EQ(std::adjacent_find(b.begin(), b.end()), b.end());
  }
}

TEST(Commutativity, Instances) {
  auto g = validate_commutativity(*gr4(), 4);
  EXPECT_TRUE(g.holds);
  EXPECT_EQ(g.pairs_checked, 256u);
  EXPECT_TRUE(validate_commutativity(*qp(), 3).holds);
  auto n = validate_commutativity(*ns(), 2);
  EXPECT_FALSE(n.holds);
  ASSERT_FALSE(n.failures.empty());
  auto nsp = ns();
  EXPECT_EQ(n.failures[0].a, M(nsp, "x"));
  EXPECT_EQ(n.failures[0].b, M(nsp, "y"));
}

TEST(Commutativity, VerdictMatchesPairwiseSymmetry) {
  for (auto spec : {gr4(), qp(), ns(), z4()}) {
    auto basis = basis_enumerate(*spec, 2);
    bool symmetric = true;
    for (const auto &u : basis)
      for (const auto &v : basis) {
        auto uv = multiply(*spec, basis_element(*spec, u), basis_element(*spec, v));
        if (uv.is_zero())
          continue;
        auto p = spec->chi()(spec->degree(u), spec->degree(v)) *
                 spec->chi()(spec->degree(v), spec->degree(u));
        symmetric = symmetric && p.is_one();
      }
    EXPECT_EQ(validate_commutativity(*spec, 2).holds, symmetric);
  }
}

TEST(AlgebraSpec, Validation) {
  GroupSpec z(1, {});
  Bicharacter chi(z, QQ(), {{S(QQ(), "-1")}});
  EXPECT_THROW(AlgebraSpec({{"x", z.make({1})}, {"x", z.make({1})}}, chi, 2), ValidationError);
  EXPECT_THROW(AlgebraSpec({{"x", GroupElement({1, 0})}}, chi, 2), DimensionMismatch);
  auto g = gr4();
  EXPECT_TRUE(g->square_zero(0));
  EXPECT_FALSE(qp()->square_zero(0));
  EXPECT_EQ(g->index_of("x3"), 2u);
  EXPECT_FALSE(g->index_of("x9"));
  EXPECT_EQ(g->render(Monomial({0, 1, 2})), "x1*x2*x3");
  EXPECT_EQ(g->render(Monomial::unit()), "1");
}

} // namespace
