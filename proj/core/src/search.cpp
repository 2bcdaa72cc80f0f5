#include "bverify/search.hpp"

#include "bverify/errors.hpp"

#include <numeric>

namespace bverify {

std::string SearchPredicate::str() const {
  switch (kind) {
  case Kind::chi_ee_eq_minus_one:
    return "chi(e,e)=-1 with e=" + e.str();
  case Kind::symmetric:
    return "symmetric";
  case Kind::nonsymmetric:
    break;
  }
  return "nonsymmetric";
}

ScalarDomain root_of_unity_domain(const GroupSpec &group) {
  long L = 1;
  for (long n : group.torsion())
    L = std::lcm(L, n);
  return L <= 2 ? ScalarDomain::rational() : ScalarDomain::cyclotomic(static_cast<int>(L));
}

namespace {

// zeta_L^k, with zeta_2 = -1 represented in Q.
Scalar root_power(const ScalarDomain &dom, long L, long k) {
  if (dom.kind() == ScalarDomain::Kind::rational)
    return Scalar::from_int(dom, (L == 2 && k % 2 == 1) ? -1 : 1);
  return Scalar::generator(dom).pow(k);
}

bool matches(const Bicharacter &chi, const SearchPredicate &p) {
  const auto &M = chi.matrix();
  auto symmetric = [&] {
    for (std::size_t i = 0; i < M.size(); ++i)
      for (std::size_t j = i; j < M.size(); ++j)
        if (!(M[i][j] * M[j][i]).is_one())
          return false;
    return true;
  };
  switch (p.kind) {
  case SearchPredicate::Kind::chi_ee_eq_minus_one:
    return chi(p.e, p.e).is_minus_one();
  case SearchPredicate::Kind::symmetric:
    return symmetric();
  case SearchPredicate::Kind::nonsymmetric:
    break;
  }
  return !symmetric();
}

} // namespace

std::vector<Bicharacter> bicharacter_search(const GroupSpec &group,
                                            const SearchPredicate &predicate,
                                            const SearchBounds &bounds) {
  if (!group.is_finite())
    throw ValidationError("bicharacter search needs a finite group, got " + group.str());
  const std::size_t n = group.dimension();
  const ScalarDomain dom = root_of_unity_domain(group);
  long L = 1;
  for (long t : group.torsion())
    L = std::lcm(L, t);

  SearchPredicate pred = predicate;
  if (pred.kind == SearchPredicate::Kind::chi_ee_eq_minus_one)
    pred.e = group.canonicalize(pred.e);

  // candidates[i*n + j] lists the admissible values of M[i][j].
  std::vector<std::vector<Scalar>> candidates(n * n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long g = std::gcd(group.order(i), group.order(j));
      for (long k = 0; k < g; ++k)
        candidates[i * n + j].push_back(root_power(dom, L, k * (L / g)));
      if (total > bounds.max_candidates / static_cast<std::size_t>(g))
        throw SearchSpaceTooLarge("more than " + std::to_string(bounds.max_candidates) +
                                  " candidate matrices on " + group.str());
      total *= static_cast<std::size_t>(g);
    }
  }

  std::vector<Bicharacter> found;
  std::vector<std::size_t> digits(n * n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    Bicharacter::Matrix M(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        M[i][j] = candidates[i * n + j][digits[i * n + j]];
    Bicharacter chi(group, dom, std::move(M));
    if (matches(chi, pred))
      found.push_back(std::move(chi));
    // Mixed-radix increment, last entry fastest.
    for (std::size_t k = n * n; k-- > 0;) {
      if (++digits[k] < candidates[k].size())
        break;
      digits[k] = 0;
    }
  }
  return found;
}

} // namespace bverify
