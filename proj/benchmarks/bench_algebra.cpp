#include "bverify/omega.hpp"
#include "bverify/verify.hpp"

#include <benchmark/benchmark.h>

using namespace bverify;

namespace {

AlgebraSpecPtr grassmann(std::size_t n) {
  GroupSpec z(1, {});
  ScalarDomain q = ScalarDomain::rational();
  Bicharacter chi(z, q, {{Scalar::from_int(q, -1)}});
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back({"x" + std::to_string(i + 1), z.make({1})});
  return std::make_shared<const AlgebraSpec>(gens, chi, n);
}

AlgebraSpecPtr quantum_plane(std::size_t max_len) {
  GroupSpec z2(2, {});
  ScalarDomain d = ScalarDomain::rational_function("q");
  Scalar q = Scalar::generator(d);
  Bicharacter chi(z2, d, {{Scalar::one(d), q}, {q.inverse(), Scalar::one(d)}});
  return std::make_shared<const AlgebraSpec>(
      std::vector<Generator>{{"x", z2.make({1, 0})}, {"y", z2.make({0, 1})}}, chi, max_len);
}

GradedLinearMap partial(const AlgebraSpecPtr &spec, std::size_t i) {
  const auto &d = spec->generators()[i].degree;
  return GradedLinearMap::derivation(spec, {{i, AlgebraElement::unit(spec->domain())}},
                                     spec->group().neg(d));
}

void BM_NormalizeReversedWord(benchmark::State &state) {
  auto spec = grassmann(static_cast<std::size_t>(state.range(0)));
  std::vector<Monomial::Index> word;
  for (auto i = state.range(0); i-- > 0;)
    word.push_back(static_cast<Monomial::Index>(i));
  for (auto _ : state)
    benchmark::DoNotOptimize(normalize_word(*spec, word));
}
BENCHMARK(BM_NormalizeReversedWord)->Arg(4)->Arg(8)->Arg(12);

void BM_MultiplyQuantumPlane(benchmark::State &state) {
  auto spec = quantum_plane(8);
  AlgebraElement a = parse_element(*spec, "x + q*y + x*y");
  AlgebraElement b = parse_element(*spec, "y*y - x + 1");
  for (auto _ : state)
    benchmark::DoNotOptimize(multiply(*spec, a, b));
}
BENCHMARK(BM_MultiplyQuantumPlane);

void BM_Omega3Grassmann(benchmark::State &state) {
  auto spec = grassmann(4);
  GradedLinearMap D = GradedLinearMap::compose(
      GradedLinearMap::left_multiply(spec, AlgebraElement::generator(*spec, 0)),
      GradedLinearMap::compose(partial(spec, 2), partial(spec, 1)));
  auto basis = basis_enumerate(*spec, 4);
  auto path = static_cast<OmegaPath>(state.range(0));
  for (auto _ : state) {
    for (const auto &a : basis)
      for (const auto &b : basis)
        for (const auto &c : basis) {
          auto e = [](const Monomial &m) { return AlgebraElement::term(m, Scalar::one({})); };
          benchmark::DoNotOptimize(omega3(path, D, e(a), e(b), e(c)));
        }
  }
}
BENCHMARK(BM_Omega3Grassmann)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Lemma32Suite(benchmark::State &state) {
  Instance inst;
  inst.name = "GR4";
  inst.spec = grassmann(4);
  inst.maps.emplace("d2", partial(inst.spec, 1));
  SuiteRequest req{SuiteId::lemma32, "d2", Mode::assert_holds, Bounds{4, 6}};
  for (auto _ : state)
    benchmark::DoNotOptimize(run_suite(inst, req));
}
BENCHMARK(BM_Lemma32Suite)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
