#pragma once

// Reference computations written independently of the engine's algorithms,
// used as test oracles.

#include "instances.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace bvtest {

/// chi(g,h) from the generator matrix by repeated multiplication and division,
/// one factor at a time, without Scalar::pow.
inline Scalar chi_by_products(const Bicharacter &chi, const GroupElement &g,
                              const GroupElement &h) {
  const auto &domain = chi.domain();
  Scalar out = Scalar::one(domain);
  for (std::size_t i = 0; i < g.coords.size(); ++i)
    for (std::size_t j = 0; j < h.coords.size(); ++j) {
      long k = g.coords[i] * h.coords[j];
      for (long n = 0; n < (k < 0 ? -k : k); ++n)
        out = k > 0 ? out * chi.matrix()[i][j] : out / chi.matrix()[i][j];
    }
  return out;
}

/// Grassmann sign rule: zero on a repeated index, else the parity of the
/// sorting permutation counted by inversions.
inline std::optional<std::pair<int, std::vector<Monomial::Index>>>
grassmann_word(std::vector<Monomial::Index> word) {
  int inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] == word[j])
        return std::nullopt;
      if (word[i] > word[j])
        ++inversions;
    }
  std::sort(word.begin(), word.end());
  return std::make_pair(inversions % 2 ? -1 : 1, word);
}

/// Quantum plane rule yx = q^-1 xy: a word in x (0) and y (1) equals
/// q^(-k) x^a y^b with k the number of (y before x) pairs.
inline std::pair<long, std::vector<Monomial::Index>> quantum_plane_word(
    std::vector<Monomial::Index> word) {
  long k = 0, ys = 0;
  for (auto w : word) {
    if (w == 1)
      ++ys;
    else
      k += ys;
  }
  std::sort(word.begin(), word.end());
  return {-k, word};
}

inline Scalar q_power(long k) {
  return parse_scalar(QQ_q(), "q^(" + std::to_string(k) + ")");
}

/// Number of squarefree monomials of length <= L in n Grassmann variables.
inline std::size_t grassmann_basis_count(std::size_t n, std::size_t L) {
  std::size_t total = 0, binom = 1;
  for (std::size_t k = 0; k <= std::min(n, L); ++k) {
    total += binom;
    binom = binom * (n - k) / (k + 1);
  }
  return total;
}

/// Number of monomials x^a y^b with a + b <= L.
inline std::size_t plane_basis_count(std::size_t L) { return (L + 1) * (L + 2) / 2; }

/// Odd partial derivative on a squarefree Grassmann monomial: removes x_i from
/// position p with sign (-1)^p.
inline AlgebraElement grassmann_partial(const AlgebraSpec &spec, const Monomial &m,
                                        Monomial::Index i) {
  const auto &idx = m.indices();
  auto it = std::find(idx.begin(), idx.end(), i);
  if (it == idx.end())
    return {};
  auto p = it - idx.begin();
  std::vector<Monomial::Index> rest(idx.begin(), idx.end());
  rest.erase(rest.begin() + p);
  return AlgebraElement::term(Monomial(rest), Scalar::from_int(spec.domain(), p % 2 ? -1 : 1));
}

/// Quantum plane partials: dx(x^a y^b) = a x^(a-1) y^b,
/// dy(x^a y^b) = b q^a x^a y^(b-1).
inline AlgebraElement plane_partial(const AlgebraSpec &spec, const Monomial &m, int var) {
  long a = std::count(m.indices().begin(), m.indices().end(), 0);
  long b = static_cast<long>(m.size()) - a;
  auto word = [](long na, long nb) {
    std::vector<Monomial::Index> w(static_cast<std::size_t>(na), 0);
    w.insert(w.end(), static_cast<std::size_t>(nb), 1);
    return Monomial(w);
  };
  const auto &d = spec.domain();
  if (var == 0)
    return a == 0 ? AlgebraElement{} : AlgebraElement::term(word(a - 1, b), Scalar::from_int(d, a));
  return b == 0 ? AlgebraElement{}
                : AlgebraElement::term(word(a, b - 1), Scalar::from_int(d, b) * q_power(a));
}

} // namespace bvtest
