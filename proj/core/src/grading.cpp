#include "bverify/grading.hpp"

#include "bverify/errors.hpp"

namespace bverify {

std::string GroupElement::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(coords[i]);
  }
  return s + "]";
}

GroupSpec::GroupSpec(int free_rank, std::vector<long> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0)
    throw DimensionMismatch("free rank must be non-negative");
  for (long n : torsion_)
    if (n < 2)
      throw DimensionMismatch("torsion orders must be >= 2, got " + std::to_string(n));
}

long GroupSpec::order(std::size_t i) const {
  if (i < static_cast<std::size_t>(free_rank_))
    return 0;
  return torsion_.at(i - static_cast<std::size_t>(free_rank_));
}

GroupElement GroupSpec::zero() const { return GroupElement(std::vector<long>(dimension(), 0)); }

void GroupSpec::check(const GroupElement &g) const {
  if (g.dimension() != dimension())
    throw DimensionMismatch("group element " + g.str() + " has dimension " +
                            std::to_string(g.dimension()) + ", expected " +
                            std::to_string(dimension()));
}

GroupElement GroupSpec::canonicalize(GroupElement g) const {
  check(g);
  for (std::size_t i = static_cast<std::size_t>(free_rank_); i < g.coords.size(); ++i) {
    long n = order(i);
    g.coords[i] = ((g.coords[i] % n) + n) % n;
  }
  return g;
}

GroupElement GroupSpec::add(const GroupElement &a, const GroupElement &b) const {
  check(a);
  check(b);
  GroupElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    r.coords[i] += b.coords[i];
  return canonicalize(std::move(r));
}

GroupElement GroupSpec::neg(const GroupElement &a) const {
  check(a);
  GroupElement r = a;
  for (auto &c : r.coords)
    c = -c;
  return canonicalize(std::move(r));
}

std::string GroupSpec::str() const {
  std::string s;
  if (free_rank_ > 0)
    s = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (long n : torsion_)
    s += (s.empty() ? "Z" : "xZ") + std::to_string(n);
  return s.empty() ? "0" : s;
}

Bicharacter::Bicharacter(GroupSpec group, ScalarDomain domain, Matrix matrix)
    : group_(std::move(group)), domain_(std::move(domain)), matrix_(std::move(matrix)) {
  const std::size_t n = group_.dimension();
  if (matrix_.size() != n)
    throw DimensionMismatch("bicharacter matrix has " + std::to_string(matrix_.size()) +
                            " rows, group dimension is " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n)
      throw DimensionMismatch("bicharacter row " + std::to_string(i) + " has " +
                              std::to_string(matrix_[i].size()) + " entries, expected " +
                              std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (!(matrix_[i][j].domain() == domain_))
        throw DomainMismatch("bicharacter entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") is not in " + domain_.describe());
      if (matrix_[i][j].is_zero())
        throw DivisionByZero("bicharacter entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") is zero");
    }
  }
}

Scalar Bicharacter::operator()(const GroupElement &g, const GroupElement &h) const {
  group_.check(g);
  group_.check(h);
  auto key = std::make_pair(g, h);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->values.find(key); it != cache_->values.end())
      return it->second;
  }
  Scalar value = Scalar::one(domain_);
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (g.coords[i] == 0)
      continue;
    for (std::size_t j = 0; j < h.coords.size(); ++j)
      if (h.coords[j] != 0)
        value *= matrix_[i][j].pow(g.coords[i] * h.coords[j]);
  }
  std::lock_guard lock(cache_->mutex);
  cache_->values.emplace(std::move(key), value);
  return value;
}

ChiValidation chi_validate(const Bicharacter &chi) {
  ChiValidation report;
  const auto &group = chi.group();
  const std::size_t n = group.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar &entry = chi.matrix()[i][j];
      for (long order : {group.order(i), group.order(j)}) {
        if (order == 0)
          continue;
        Scalar p = entry.pow(order);
        if (!p.is_one()) {
          report.valid = false;
          report.violations.push_back({i, j, order, p});
        }
        if (group.order(i) == group.order(j))
          break;
      }
    }
  }
  return report;
}

SymmetryVerdict chi_symmetry_check(const Bicharacter &chi, std::span<const GroupElement> degrees) {
  SymmetryVerdict verdict;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::size_t j = i; j < degrees.size(); ++j) {
      Scalar p = chi(degrees[i], degrees[j]) * chi(degrees[j], degrees[i]);
      if (!p.is_one()) {
        verdict.symmetric = false;
        verdict.failures.push_back({degrees[i], degrees[j], p});
      }
    }
  }
  return verdict;
}

} // namespace bverify
