#include "bverify/linear_map.hpp"

#include "bverify/errors.hpp"

#include <mutex>
#include <variant>
#include <vector>

namespace bverify {

namespace {

struct Zero {};
struct Identity {};
struct Table {
  std::map<Monomial, AlgebraElement> images;
};
struct Derivation {
  std::vector<AlgebraElement> values;  // indexed by generator
};
struct LeftMultiply {
  AlgebraElement factor;
};
struct Compose {
  GradedLinearMap outer, inner;
};
struct Sum {
  GradedLinearMap a, b;
};
struct Scale {
  Scalar factor;
  GradedLinearMap inner;
};

} // namespace

struct GradedLinearMap::Node {
  AlgebraSpecPtr spec;
  GroupElement degree;
  std::variant<Zero, Identity, Table, Derivation, LeftMultiply, Compose, Sum, Scale> rule;
  std::string description;

  mutable std::mutex memo_mutex;
  mutable std::map<Monomial, AlgebraElement> memo;

  AlgebraElement evaluate(const Monomial &m) const;
};

void require_homogeneous(const AlgebraSpec &spec, const AlgebraElement &a,
                         const GroupElement &expected, const std::string &context) {
  for (const auto &[m, c] : a.terms())
    if (spec.degree(m) != expected)
      throw InhomogeneousRule(context + ": term " + spec.render(m) + " has degree " +
                              spec.degree(m).str() + ", expected " + expected.str());
}

namespace {

std::shared_ptr<GradedLinearMap::Node> make_node(AlgebraSpecPtr spec, GroupElement degree,
                                                 std::string description) {
  auto node = std::make_shared<GradedLinearMap::Node>();
  node->degree = spec->group().canonicalize(std::move(degree));
  node->spec = std::move(spec);
  node->description = std::move(description);
  return node;
}

void require_same_spec(const GradedLinearMap &a, const GradedLinearMap &b) {
  if (a.spec_ptr() != b.spec_ptr())
    throw DomainMismatch("linear maps over different algebras");
}

} // namespace

GradedLinearMap GradedLinearMap::zero(AlgebraSpecPtr spec, GroupElement degree) {
  auto node = make_node(std::move(spec), std::move(degree), "0");
  node->rule = Zero{};
  return GradedLinearMap(std::move(node));
}

GradedLinearMap GradedLinearMap::identity(AlgebraSpecPtr spec) {
  GroupElement z = spec->group().zero();
  auto node = make_node(std::move(spec), std::move(z), "id");
  node->rule = Identity{};
  return GradedLinearMap(std::move(node));
}

GradedLinearMap GradedLinearMap::from_table(AlgebraSpecPtr spec, GroupElement degree,
                                            std::map<Monomial, AlgebraElement> table) {
  auto node = make_node(std::move(spec), std::move(degree), "table");
  const AlgebraSpec &s = *node->spec;
  for (const auto &[m, image] : table) {
    if (m.size() > s.max_len())
      throw OutOfBasis("table entry " + s.render(m) + " is longer than max_len");
    if (image.max_length() > s.max_len())
      throw TruncationExceeded("table image of " + s.render(m) + " exceeds max_len");
    require_homogeneous(s, image, s.group().add(s.degree(m), node->degree),
                        "table image of " + s.render(m));
  }
  std::erase_if(table, [](const auto &kv) { return kv.second.is_zero(); });
  node->rule = Table{std::move(table)};
  return GradedLinearMap(std::move(node));
}

GradedLinearMap GradedLinearMap::derivation(AlgebraSpecPtr spec,
                                            std::map<std::size_t, AlgebraElement> values,
                                            GroupElement degree) {
  auto node = make_node(std::move(spec), std::move(degree), "der");
  const AlgebraSpec &s = *node->spec;
  Derivation rule;
  rule.values.resize(s.generator_count());
  for (auto &[i, v] : values) {
    if (i >= s.generator_count())
      throw DimensionMismatch("derivation value for unknown generator " + std::to_string(i));
    require_homogeneous(s, v, s.group().add(s.generators()[i].degree, node->degree),
                        "derivation value of " + s.generators()[i].name);
    rule.values[i] = std::move(v);
  }
  node->rule = std::move(rule);
  return GradedLinearMap(std::move(node));
}

GradedLinearMap GradedLinearMap::left_multiply(AlgebraSpecPtr spec, AlgebraElement h,
                                               std::optional<GroupElement> degree) {
  std::optional<GroupElement> d = homogeneous_degree(*spec, h);
  if (!h.is_zero() && !d)
    throw InhomogeneousRule("left multiplier " + h.str(*spec) + " is not homogeneous");
  if (!d) {
    if (!degree)
      throw InhomogeneousRule("left multiplication by zero needs an explicit degree");
    d = *degree;
  } else if (degree && spec->group().canonicalize(*degree) != *d) {
    throw InhomogeneousRule("left multiplier " + h.str(*spec) + " has degree " + d->str() +
                            ", declared " + degree->str());
  }
  std::string desc = "lmul(" + h.str(*spec) + ")";
  auto node = make_node(std::move(spec), std::move(*d), std::move(desc));
  node->rule = LeftMultiply{std::move(h)};
  return GradedLinearMap(std::move(node));
}

GradedLinearMap GradedLinearMap::compose(const GradedLinearMap &outer,
                                         const GradedLinearMap &inner) {
  require_same_spec(outer, inner);
  auto node = make_node(outer.spec_ptr(), outer.spec().group().add(outer.degree(), inner.degree()),
                        outer.describe() + " . " + inner.describe());
  node->rule = Compose{outer, inner};
  return GradedLinearMap(std::move(node));
}

GradedLinearMap GradedLinearMap::sum(const GradedLinearMap &a, const GradedLinearMap &b) {
  require_same_spec(a, b);
  if (a.degree() != b.degree())
    throw InhomogeneousRule("sum of maps of degrees " + a.degree().str() + " and " +
                            b.degree().str());
  auto node = make_node(a.spec_ptr(), a.degree(), a.describe() + " + " + b.describe());
  node->rule = Sum{a, b};
  return GradedLinearMap(std::move(node));
}

GradedLinearMap GradedLinearMap::scale(const Scalar &c, const GradedLinearMap &a) {
  auto node = make_node(a.spec_ptr(), a.degree(), c.str() + "*(" + a.describe() + ")");
  node->rule = Scale{c, a};
  return GradedLinearMap(std::move(node));
}

const GroupElement &GradedLinearMap::degree() const { return node_->degree; }
const AlgebraSpec &GradedLinearMap::spec() const { return *node_->spec; }
const AlgebraSpecPtr &GradedLinearMap::spec_ptr() const { return node_->spec; }
std::string GradedLinearMap::describe() const { return node_->description; }

GroupElement GradedLinearMap::image_degree(const GroupElement &g) const {
  return spec().group().add(g, degree());
}

AlgebraElement GradedLinearMap::apply(const Monomial &m) const {
  if (m.size() > spec().max_len())
    throw OutOfBasis("monomial " + spec().render(m) + " is outside the truncated basis");
  if (std::holds_alternative<Zero>(node_->rule))
    return {};
  if (std::holds_alternative<Identity>(node_->rule))
    return AlgebraElement::term(m, Scalar::one(spec().domain()));
  {
    std::lock_guard lock(node_->memo_mutex);
    if (auto it = node_->memo.find(m); it != node_->memo.end())
      return it->second;
  }
  AlgebraElement image = node_->evaluate(m);
  std::lock_guard lock(node_->memo_mutex);
  return node_->memo.emplace(m, std::move(image)).first->second;
}

AlgebraElement GradedLinearMap::operator()(const AlgebraElement &a) const {
  AlgebraElement r;
  for (const auto &[m, c] : a.terms()) {
    AlgebraElement image = apply(m);
    if (!image.is_zero())
      r += c * image;
  }
  return r;
}

AlgebraElement GradedLinearMap::Node::evaluate(const Monomial &m) const {
  const AlgebraSpec &s = *spec;
  return std::visit(
      [&](const auto &rule) -> AlgebraElement {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, Zero>) {
          return {};
        } else if constexpr (std::is_same_v<R, Identity>) {
          return AlgebraElement::term(m, Scalar::one(s.domain()));
        } else if constexpr (std::is_same_v<R, Table>) {
          auto it = rule.images.find(m);
          return it == rule.images.end() ? AlgebraElement{} : it->second;
        } else if constexpr (std::is_same_v<R, Derivation>) {
          // d(x_{i1} ... x_{ik}) = sum_p chi(|x_{i1}...x_{i(p-1)}|, e)^-1
          //                              x_{i1}...d(x_{ip})...x_{ik}
          AlgebraElement out;
          const auto &idx = m.indices();
          const ScalarDomain &dom = s.domain();
          for (std::size_t p = 0; p < idx.size(); ++p) {
            const AlgebraElement &dv = rule.values[idx[p]];
            if (dv.is_zero())
              continue;
            Monomial prefix(std::vector<Monomial::Index>(idx.begin(), idx.begin() + p));
            Monomial suffix(std::vector<Monomial::Index>(idx.begin() + p + 1, idx.end()));
            Scalar sign = s.chi()(s.degree(prefix), degree).inverse();
            AlgebraElement piece =
                multiply(s, multiply(s, AlgebraElement::term(prefix, Scalar::one(dom)), dv),
                         AlgebraElement::term(suffix, Scalar::one(dom)));
            out += sign * piece;
          }
          return out;
        } else if constexpr (std::is_same_v<R, LeftMultiply>) {
          return multiply(s, rule.factor, AlgebraElement::term(m, Scalar::one(s.domain())));
        } else if constexpr (std::is_same_v<R, Compose>) {
          return rule.outer(rule.inner.apply(m));
        } else if constexpr (std::is_same_v<R, Sum>) {
          return rule.a.apply(m) + rule.b.apply(m);
        } else {
          return rule.factor * rule.inner.apply(m);
        }
      },
      rule);
}

} // namespace bverify
