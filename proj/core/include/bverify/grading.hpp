#pragma once

#include "bverify/scalar.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace bverify {

/// Element of Z^r + Z_{n1} + ... + Z_{nt}; coordinates in generator order.
struct GroupElement {
  std::vector<long> coords;

  GroupElement() = default;
  explicit GroupElement(std::vector<long> c) : coords(std::move(c)) {}

  std::size_t dimension() const { return coords.size(); }
  std::string str() const;

  friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
  friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

/// Finitely generated abelian group: free rank plus torsion orders.
class GroupSpec {
public:
  GroupSpec() = default;
  GroupSpec(int free_rank, std::vector<long> torsion);

  int free_rank() const { return free_rank_; }
  const std::vector<long> &torsion() const { return torsion_; }
  std::size_t dimension() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }
  /// Order of generator i, or 0 when it is a free generator.
  long order(std::size_t i) const;
  bool is_finite() const { return free_rank_ == 0; }

  GroupElement zero() const;
  /// Reduces torsion coordinates into [0, n_i).
  GroupElement canonicalize(GroupElement g) const;
  GroupElement make(std::vector<long> coords) const { return canonicalize(GroupElement(std::move(coords))); }
  GroupElement add(const GroupElement &a, const GroupElement &b) const;
  GroupElement neg(const GroupElement &a) const;
  GroupElement sub(const GroupElement &a, const GroupElement &b) const { return add(a, neg(b)); }
  void check(const GroupElement &g) const;

  std::string str() const;
  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;

private:
  int free_rank_ = 0;
  std::vector<long> torsion_;
};

/// Bicharacter given by its values on generator pairs; evaluated through the
/// unique bilinear extension chi(g, h) = prod_{i,j} M[i][j]^(g_i h_j).
class Bicharacter {
public:
  using Matrix = std::vector<std::vector<Scalar>>;

  Bicharacter(GroupSpec group, ScalarDomain domain, Matrix matrix);

  const GroupSpec &group() const { return group_; }
  const ScalarDomain &domain() const { return domain_; }
  const Matrix &matrix() const { return matrix_; }

  /// chi(g, h). Memoized; safe to call concurrently.
  Scalar operator()(const GroupElement &g, const GroupElement &h) const;

private:
  GroupSpec group_;
  ScalarDomain domain_;
  Matrix matrix_;

  struct Cache {
    std::mutex mutex;
    std::map<std::pair<GroupElement, GroupElement>, Scalar> values;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// A generator-matrix entry that breaks the torsion constraint M[i][j]^n = 1.
struct TorsionViolation {
  std::size_t row;
  std::size_t col;
  long order;       ///< the torsion order that is violated
  Scalar power;     ///< M[row][col]^order
};

struct ChiValidation {
  bool valid = true;
  std::vector<TorsionViolation> violations;
};

/// Checks that every entry is compatible with the torsion of both indices.
ChiValidation chi_validate(const Bicharacter &chi);

struct SymmetryFailure {
  GroupElement g;
  GroupElement h;
  Scalar product;  ///< chi(g,h) * chi(h,g)
};

struct SymmetryVerdict {
  bool symmetric = true;
  std::vector<SymmetryFailure> failures;
};

/// Tests chi(g,h) chi(h,g) = 1 over all ordered pairs of `degrees`.
SymmetryVerdict chi_symmetry_check(const Bicharacter &chi, std::span<const GroupElement> degrees);

} // namespace bverify
