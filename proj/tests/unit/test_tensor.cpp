#include "bverify/tensor.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace bverify;
using namespace bvtest;

namespace {

TensorElement T(const AlgebraSpecPtr &spec, const std::string &l, const std::string &r,
                const std::string &c = "1") {
  return TensorElement::term(M(spec, l), M(spec, r), S(spec->domain(), c));
}

TEST(Braiding, Examples) {
  auto g = gr4();
  EXPECT_EQ(braiding_apply(*g, T(g, "x1", "x2")), T(g, "x2", "x1", "-1"));
  for (const auto &m : basis_enumerate(*g, 4))
    EXPECT_EQ(braiding_apply(*g, TensorElement::term(Monomial::unit(), m, Scalar::one(QQ()))),
              TensorElement::term(m, Monomial::unit(), Scalar::one(QQ())));
  auto p = qp();
  TensorElement bxy = braiding_apply(*p, T(p, "x", "y"));
  EXPECT_EQ(bxy, T(p, "y", "x", "q"));
  EXPECT_EQ(braiding_apply(*p, bxy, true), T(p, "x", "y"));
}

TEST(Braiding, InverseUndoesForwardOnAllPairs) {
  for (auto spec : {gr4(), qp(), ns(), z4()}) {
    auto basis = basis_enumerate(*spec, 3);
    for (const auto &u : basis)
      for (const auto &v : basis) {
        auto t = TensorElement::term(u, v, Scalar::one(spec->domain()));
        EXPECT_EQ(braiding_apply(*spec, braiding_apply(*spec, t), true), t);
        EXPECT_EQ(braiding_apply(*spec, braiding_apply(*spec, t, true)), t);
      }
  }
}

TEST(Braiding, InvolutiveWhenSymmetric) {
  for (auto spec : {gr4(), qp()}) {
    auto basis = basis_enumerate(*spec, 3);
    for (const auto &u : basis)
      for (const auto &v : basis) {
        auto t = TensorElement::term(u, v, Scalar::one(spec->domain()));
        EXPECT_EQ(braiding_apply(*spec, braiding_apply(*spec, t)), t);
      }
  }
  // The non-symmetric bicharacter is detected by B o B != id on (x, y).
  auto n = ns();
  auto t = T(n, "x", "y");
  EXPECT_NE(braiding_apply(*n, braiding_apply(*n, t)), t);
}

TEST(TensorMultiply, Examples) {
  auto g = gr4();
  EXPECT_EQ(tensor_multiply(*g, T(g, "1", "x1"), T(g, "x2", "1")), T(g, "x2", "x1", "-1"));
  EXPECT_EQ(tensor_multiply(*g, T(g, "x1", "1"), T(g, "x2", "1")), T(g, "x1*x2", "1"));
  auto p = qp();
  EXPECT_EQ(tensor_multiply(*p, T(p, "1", "y"), T(p, "x", "1")), T(p, "x", "y", "q^-1"));
  EXPECT_EQ(tensor_multiply(*p, T(p, "x*y", "1"), T(p, "x", "1")), T(p, "x*x*y", "1", "1/q"));
}

TEST(TensorMultiply, UnitalAndAssociative) {
  std::mt19937 rng(4242);
  for (auto spec : {gr4(), qp(), z4(6)}) {
    auto basis = basis_enumerate(*spec, 1);
    auto unit = TensorElement::unit(spec->domain());
    auto random_tensor = [&] {
      AlgebraElement a = random_homogeneous(rng, *spec, basis);
      AlgebraElement b = random_homogeneous(rng, *spec, basis);
      return TensorElement::product(a, b);
    };
    for (int i = 0; i < 300; ++i) {
      auto s = random_tensor(), t = random_tensor(), u = random_tensor();
      EXPECT_EQ(tensor_multiply(*spec, tensor_multiply(*spec, s, t), u),
                tensor_multiply(*spec, s, tensor_multiply(*spec, t, u)));
      EXPECT_EQ(tensor_multiply(*spec, unit, s), s);
      EXPECT_EQ(tensor_multiply(*spec, s, unit), s);
    }
  }
}

TEST(Delta, Examples) {
  auto g = gr4();
  EXPECT_EQ(delta(*g, E(g, "x1")), T(g, "x1", "1") - T(g, "1", "x1"));
  EXPECT_TRUE(delta(*g, E(g, "1")).is_zero());
  EXPECT_EQ(delta(*g, E(g, "2*x1*x2")), T(g, "x1*x2", "1", "2") - T(g, "1", "x1*x2", "2"));
  EXPECT_EQ(delta(*g, E(g, "x1")).str(*g), "-1 * (1 ⊗ x1) + 1 * (x1 ⊗ 1)");
}

TEST(Delta, SingleFactorAndUnitFactor) {
  auto p = qp();
  AlgebraElement a = E(p, "x*y + q*y");
  std::vector<AlgebraElement> one{a};
  EXPECT_EQ(delta_n(*p, one), delta(*p, a));
  std::vector<AlgebraElement> with_unit{AlgebraElement::unit(p->domain()), a};
  EXPECT_TRUE(delta_n(*p, with_unit).is_zero());
}

TEST(Delta, ComponentsKeepTotalDegree) {
  for (auto spec : {gr4(), qp()}) {
    for (const auto &m : basis_enumerate(*spec, 3)) {
      auto d = delta(*spec, basis_element(*spec, m));
      for (const auto &[pair, c] : d.terms())
        EXPECT_EQ(spec->group().add(spec->degree(pair.first), spec->degree(pair.second)),
                  spec->degree(m));
    }
  }
}

// ab (x) 1 - a (x) b - chi(a,b) b (x) a + 1 (x) ab, assembled from the word
// oracles rather than the engine's multiplication.
void check_four_term(const AlgebraSpecPtr &spec, bool grassmann) {
  const auto &dom = spec->domain();
  std::size_t n = spec->generator_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto a = static_cast<Monomial::Index>(i), b = static_cast<Monomial::Index>(j);
      TensorElement expected;
      Monomial ma({a}), mb({b});
      Scalar chi_ab = chi_by_products(spec->chi(), spec->generators()[i].degree,
                                      spec->generators()[j].degree);
      if (grassmann) {
        if (auto w = grassmann_word({a, b})) {
          Monomial ab(w->second);
          Scalar s = Scalar::from_int(dom, w->first);
          expected.add_term({ab, Monomial::unit()}, s);
          expected.add_term({Monomial::unit(), ab}, s);
        }
      } else {
        auto [k, sorted] = quantum_plane_word({a, b});
        Monomial ab(sorted);
        expected.add_term({ab, Monomial::unit()}, q_power(k));
        expected.add_term({Monomial::unit(), ab}, q_power(k));
      }
      expected.add_term({ma, mb}, Scalar::from_int(dom, -1));
      expected.add_term({mb, ma}, -chi_ab);
      std::vector<AlgebraElement> args{basis_element(*spec, ma), basis_element(*spec, mb)};
      EXPECT_EQ(delta_n(*spec, args), expected) << i << "," << j;
    }
}

TEST(Delta, FourTermExpansionOnGrassmannGeneratorPairs) { check_four_term(gr4(), true); }

TEST(Delta, FourTermExpansionOnQuantumPlaneGeneratorPairs) { check_four_term(qp(), false); }

} // namespace
