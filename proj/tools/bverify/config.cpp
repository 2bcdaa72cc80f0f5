#include "config.hpp"

#include "bverify/errors.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bverify::cli {

using nlohmann::json;

namespace {

// ---- schema helpers ------------------------------------------------------

std::string child(const std::string &path, std::string_view key) {
  return path + "/" + std::string(key);
}
std::string child(const std::string &path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json &require(const json &obj, std::string_view key, const std::string &path) {
  if (!obj.is_object())
    throw SchemaError((path.empty() ? std::string("/") : path) + ": expected an object");
  auto it = obj.find(std::string(key));
  if (it == obj.end())
    throw SchemaError(child(path, key) + ": missing required field");
  return *it;
}

const json *optional_field(const json &obj, std::string_view key) {
  auto it = obj.find(std::string(key));
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string as_string(const json &v, const std::string &path) {
  if (!v.is_string())
    throw SchemaError(path + ": expected a string");
  return v.get<std::string>();
}

// Scalars may be given as expression strings or JSON integers.
std::string as_scalar_text(const json &v, const std::string &path) {
  if (v.is_number_integer())
    return std::to_string(v.get<long>());
  return as_string(v, path);
}

long as_long(const json &v, const std::string &path) {
  if (!v.is_number_integer())
    throw SchemaError(path + ": expected an integer");
  return v.get<long>();
}

std::size_t as_size(const json &v, const std::string &path) {
  long n = as_long(v, path);
  if (n < 0)
    throw SchemaError(path + ": expected a non-negative integer");
  return static_cast<std::size_t>(n);
}

const json &as_array(const json &v, const std::string &path) {
  if (!v.is_array())
    throw SchemaError(path + ": expected an array");
  return v;
}

std::vector<long> as_long_vector(const json &v, const std::string &path) {
  std::vector<long> out;
  const json &arr = as_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(as_long(arr[i], child(path, i)));
  return out;
}

Bounds read_bounds(const json &obj, const std::string &path, std::size_t max_len) {
  Bounds b{max_len, max_len};
  if (const json *v = optional_field(obj, "per_arg"))
    b.per_arg = as_size(*v, child(path, "per_arg"));
  if (const json *v = optional_field(obj, "total"))
    b.total = as_size(*v, child(path, "total"));
  return b;
}

json render_bounds(const Bounds &b) { return json{{"per_arg", b.per_arg}, {"total", b.total}}; }

ScalarDomain read_domain(const json &v, const std::string &path) {
  std::string kind = as_string(require(v, "kind", path), child(path, "kind"));
  try {
    if (kind == "rational")
      return ScalarDomain::rational();
    if (kind == "cyclotomic")
      return ScalarDomain::cyclotomic(
          static_cast<int>(as_long(require(v, "order", path), child(path, "order"))));
    if (kind == "rational_function") {
      std::string var = "q";
      if (const json *x = optional_field(v, "variable"))
        var = as_string(*x, child(path, "variable"));
      return ScalarDomain::rational_function(var);
    }
  } catch (const DomainMismatch &e) {
    throw ValidationError(path + ": " + e.what());
  }
  throw SchemaError(child(path, "kind") + ": unknown domain kind '" + kind + "'");
}

json render_domain(const ScalarDomain &d) {
  switch (d.kind()) {
  case ScalarDomain::Kind::cyclotomic:
    return json{{"kind", "cyclotomic"}, {"order", d.order()}};
  case ScalarDomain::Kind::rational_function:
    return json{{"kind", "rational_function"}, {"variable", d.variable()}};
  case ScalarDomain::Kind::rational:
    break;
  }
  return json{{"kind", "rational"}};
}

// `fixed_kind` is the implied kind for entries that may omit "kind".
MapDecl read_map(const json &m, const std::string &path, const std::string &fixed_kind) {
  MapDecl d;
  d.name = as_string(require(m, "name", path), child(path, "name"));
  if (const json *k = optional_field(m, "kind"); k || fixed_kind.empty())
    d.kind = as_string(k ? *k : require(m, "kind", path), child(path, "kind"));
  else
    d.kind = fixed_kind;
  d.degree = as_long_vector(require(m, "degree", path), child(path, "degree"));
  if (d.kind == "composite") {
    d.expr = as_string(require(m, "expr", path), child(path, "expr"));
  } else {
    const json &vals = require(m, "values", path);
    if (!vals.is_object())
      throw SchemaError(child(path, "values") + ": expected an object");
    for (const auto &[k, v] : vals.items())
      d.values[k] = as_scalar_text(v, child(child(path, "values"), k));
  }
  return d;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

std::string line_col(const std::string &text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// ---- semantic building ---------------------------------------------------

AlgebraSpecPtr build_spec(const Config &c) {
  const std::size_t n = c.group.dimension();
  Bicharacter::Matrix M;
  for (std::size_t i = 0; i < c.bicharacter.size(); ++i) {
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < c.bicharacter[i].size(); ++j) {
      try {
        row.push_back(parse_scalar(c.domain, c.bicharacter[i][j]));
      } catch (const Error &e) {
        throw ValidationError("/bicharacter/" + std::to_string(i) + "/" + std::to_string(j) +
                              ": " + e.what());
      }
    }
    M.push_back(std::move(row));
  }
  if (M.size() != n)
    throw ValidationError("/bicharacter: expected " + std::to_string(n) + " rows, got " +
                          std::to_string(M.size()));
  for (std::size_t i = 0; i < n; ++i)
    if (M[i].size() != n)
      throw ValidationError("/bicharacter/" + std::to_string(i) + ": expected " +
                            std::to_string(n) + " entries");
  Bicharacter chi = [&] {
    try {
      return Bicharacter(c.group, c.domain, std::move(M));
    } catch (const Error &e) {
      throw ValidationError(std::string("/bicharacter: ") + e.what());
    }
  }();
  ChiValidation report = chi_validate(chi);
  if (!report.valid) {
    std::string msg = "/bicharacter: entries violate the torsion constraint:";
    for (const auto &v : report.violations)
      msg += " [" + std::to_string(v.row) + "][" + std::to_string(v.col) + "]=" +
             chi.matrix()[v.row][v.col].str() + " has power " + std::to_string(v.order) +
             " equal to " + v.power.str() + ";";
    msg.pop_back();
    throw ValidationError(msg);
  }

  std::vector<Generator> gens;
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    const auto &g = c.generators[i];
    std::string path = "/generators/" + std::to_string(i);
    if (!is_identifier(g.name))
      throw ValidationError(path + "/name: '" + g.name + "' is not an identifier");
    if (g.name == "zeta" || g.name == c.domain.symbol() || g.name == "id" || g.name == "q")
      throw ValidationError(path + "/name: '" + g.name + "' is reserved");
    if (g.degree.size() != n)
      throw ValidationError(path + "/degree: expected " + std::to_string(n) + " coordinates");
    gens.push_back({g.name, c.group.make(g.degree)});
  }
  try {
    return std::make_shared<const AlgebraSpec>(std::move(gens), std::move(chi), c.max_len);
  } catch (const Error &e) {
    throw ValidationError(std::string("/generators: ") + e.what());
  }
}

AlgebraElement parse_at(const AlgebraSpec &spec, const std::string &text, const std::string &path) {
  try {
    return parse_element(spec, text);
  } catch (const Error &e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// A table key must denote one normal-form monomial with coefficient 1.
Monomial parse_monomial_key(const AlgebraSpec &spec, const std::string &text,
                            const std::string &path) {
  AlgebraElement e = parse_at(spec, text, path);
  if (e.size() != 1 || !e.terms().begin()->second.is_one())
    throw ValidationError(path + ": '" + text + "' is not a normal-form monomial");
  return e.terms().begin()->first;
}

GroupElement degree_at(const Config &c, const std::vector<long> &d, const std::string &path) {
  if (d.size() != c.group.dimension())
    throw ValidationError(path + ": expected " + std::to_string(c.group.dimension()) +
                          " coordinates");
  return c.group.make(d);
}

// ---- composite expressions -----------------------------------------------

class MapExprParser {
public:
  MapExprParser(const AlgebraSpecPtr &spec, std::string_view text,
                const std::map<std::string, GradedLinearMap> &known,
                const std::map<std::string, std::string> &kinds)
      : spec_(spec), text_(text), known_(known), kinds_(kinds) {}

  GradedLinearMap parse() {
    GradedLinearMap m = sum();
    skip();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return m;
  }

private:
  GradedLinearMap sum() {
    GradedLinearMap m = product();
    for (;;) {
      if (accept('+'))
        m = GradedLinearMap::sum(m, product());
      else if (accept('-'))
        m = GradedLinearMap::sum(
            m, GradedLinearMap::scale(Scalar::from_int(spec_->domain(), -1), product()));
      else
        return m;
    }
  }

  GradedLinearMap product() {
    GradedLinearMap m = factor();
    while (accept('.'))
      m = GradedLinearMap::compose(m, factor());
    return m;
  }

  GradedLinearMap factor() {
    if (accept('('))  {
      GradedLinearMap m = sum();
      if (!accept(')'))
        fail("expected ')'");
      return m;
    }
    std::string word = identifier();
    if (word == "id")
      return GradedLinearMap::identity(spec_);
    if (word == "lmul") {
      AlgebraElement h = parse_element(*spec_, argument());
      return GradedLinearMap::left_multiply(spec_, std::move(h));
    }
    if (word == "scale") {
      Scalar s = parse_scalar(spec_->domain(), argument());
      return GradedLinearMap::scale(s, GradedLinearMap::identity(spec_));
    }
    if (word == "der") {
      std::string name(argument());
      auto k = kinds_.find(name);
      if (k == kinds_.end() || k->second != "derivation")
        fail("der(" + name + ") does not name a previously declared derivation");
      return known_.at(name);
    }
    auto it = known_.find(word);
    if (it == known_.end())
      fail("unknown map '" + word + "'");
    return it->second;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      fail("expected a map name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Text between balanced parentheses following the current position.
  std::string_view argument() {
    if (!accept('('))
      fail("expected '('");
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      char c = text_[pos_++];
      if (c == '(')
        ++depth;
      else if (c == ')' && --depth == 0)
        return text_.substr(start, pos_ - 1 - start);
    }
    fail("unbalanced parentheses");
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" +
                     std::string(text_) + "\"");
  }

  const AlgebraSpecPtr &spec_;
  std::string_view text_;
  const std::map<std::string, GradedLinearMap> &known_;
  const std::map<std::string, std::string> &kinds_;
  std::size_t pos_ = 0;
};

GradedLinearMap build_map(const Config &c, const AlgebraSpecPtr &spec, const MapDecl &m,
                          const std::string &path,
                          const std::map<std::string, GradedLinearMap> &known,
                          const std::map<std::string, std::string> &kinds) {
  GroupElement degree = degree_at(c, m.degree, path + "/degree");
  try {
    if (m.kind == "derivation") {
      std::map<std::size_t, AlgebraElement> values;
      for (const auto &[gen, text] : m.values) {
        auto idx = spec->index_of(gen);
        if (!idx)
          throw ValidationError(path + "/values/" + gen + ": unknown generator");
        values[*idx] = parse_at(*spec, text, path + "/values/" + gen);
      }
      return GradedLinearMap::derivation(spec, std::move(values), degree);
    }
    if (m.kind == "table") {
      std::map<Monomial, AlgebraElement> table;
      for (const auto &[key, text] : m.values)
        table[parse_monomial_key(*spec, key, path + "/values/" + key)] =
            parse_at(*spec, text, path + "/values/" + key);
      return GradedLinearMap::from_table(spec, degree, std::move(table));
    }
    if (m.kind == "composite") {
      GradedLinearMap built = parse_map_expr(spec, m.expr, known, kinds);
      if (built.degree() != degree)
        throw ValidationError(path + "/degree: declared " + degree.str() +
                              " but the expression has degree " + built.degree().str());
      return built;
    }
  } catch (const ValidationError &) {
    throw;
  } catch (const Error &e) {
    throw ValidationError(path + ": " + e.what());
  }
  throw ValidationError(path + "/kind: unknown map kind '" + m.kind + "'");
}

} // namespace

GradedLinearMap parse_map_expr(const AlgebraSpecPtr &spec, std::string_view expr,
                               const std::map<std::string, GradedLinearMap> &known,
                               const std::map<std::string, std::string> &kinds) {
  return MapExprParser(spec, expr, known, kinds).parse();
}

Instance build_instance(const Config &c) {
  Instance inst;
  inst.name = c.name;
  inst.spec = build_spec(c);
  std::map<std::string, std::string> kinds;
  std::vector<std::pair<std::string, const MapDecl *>> decls;
  for (std::size_t i = 0; i < c.derivations.size(); ++i) {
    if (c.derivations[i].kind != "derivation")
      throw ValidationError("/derivations/" + std::to_string(i) + ": not a derivation");
    decls.emplace_back("/derivations/" + std::to_string(i), &c.derivations[i]);
  }
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    if (c.maps[i].kind == "derivation")
      throw ValidationError("/maps/" + std::to_string(i) +
                            "/kind: derivations belong under \"derivations\"");
    decls.emplace_back("/maps/" + std::to_string(i), &c.maps[i]);
  }
  for (const auto &[path, decl] : decls) {
    const MapDecl &m = *decl;
    if (!is_identifier(m.name) || m.name == "id" || m.name == "lmul" || m.name == "der" ||
        m.name == "scale")
      throw ValidationError(path + "/name: '" + m.name + "' is not a usable map name");
    if (inst.maps.contains(m.name))
      throw ValidationError(path + "/name: duplicate map '" + m.name + "'");
    inst.maps.emplace(m.name, build_map(c, inst.spec, m, path, inst.maps, kinds));
    kinds[m.name] = m.kind;
  }
  if (c.cfun) {
    const CFunDecl &f = *c.cfun;
    if (f.kind == "sign_alternating") {
      if (f.functional.size() != c.group.dimension())
        throw ValidationError("/cfun/functional: expected " +
                              std::to_string(c.group.dimension()) + " coordinates");
      inst.cfun = CFunction::sign_alternating(f.functional, c.domain);
    } else if (f.kind == "table") {
      std::map<std::pair<GroupElement, GroupElement>, Scalar> values;
      for (std::size_t i = 0; i < f.entries.size(); ++i) {
        std::string path = "/cfun/entries/" + std::to_string(i);
        const auto &e = f.entries[i];
        Scalar v = [&] {
          try {
            return parse_scalar(c.domain, e.value);
          } catch (const Error &err) {
            throw ValidationError(path + "/value: " + err.what());
          }
        }();
        values[{degree_at(c, e.g, path + "/g"), degree_at(c, e.h, path + "/h")}] = v;
      }
      inst.cfun = CFunction::table(std::move(values), c.domain);
    } else {
      throw ValidationError("/cfun/kind: unknown c-function kind '" + f.kind + "'");
    }
  }
  for (std::size_t i = 0; i < c.suites.size(); ++i) {
    const SuiteDecl &s = c.suites[i];
    std::string path = "/suites/" + std::to_string(i);
    auto id = suite_from_string(s.id);
    if (!id)
      throw ValidationError(path + "/id: unknown suite '" + s.id + "'");
    if (suite_needs_map(*id) && !inst.maps.contains(s.map))
      throw ValidationError(path + "/map: unknown map '" + s.map + "'");
    if (s.mode != "assert" && s.mode != "report")
      throw ValidationError(path + "/mode: expected \"assert\" or \"report\"");
  }
  for (std::size_t i = 0; i < c.prechecks.size(); ++i)
    if (!inst.maps.contains(c.prechecks[i].map))
      throw ValidationError("/prechecks/" + std::to_string(i) + "/map: unknown map '" +
                            c.prechecks[i].map + "'");
  return inst;
}

Config parse_config_text(const std::string &text, const std::string &source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(source + ": " + line_col(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object())
    throw SchemaError("/: expected an object");

  Config c;
  c.schema = as_string(require(j, "schema", ""), "/schema");
  if (c.schema != kConfigSchema)
    throw SchemaError("/schema: unsupported schema '" + c.schema + "', expected '" +
                      kConfigSchema + "'");
  c.name = as_string(require(j, "name", ""), "/name");
  c.domain = read_domain(require(j, "domain", ""), "/domain");

  const json &g = require(j, "group", "");
  long free_rank = as_long(require(g, "free_rank", "/group"), "/group/free_rank");
  std::vector<long> torsion;
  if (const json *t = optional_field(g, "torsion"))
    torsion = as_long_vector(*t, "/group/torsion");
  try {
    c.group = GroupSpec(static_cast<int>(free_rank), torsion);
  } catch (const Error &e) {
    throw ValidationError(std::string("/group: ") + e.what());
  }

  const json &bich = as_array(require(j, "bicharacter", ""), "/bicharacter");
  for (std::size_t i = 0; i < bich.size(); ++i) {
    const json &row = as_array(bich[i], child("/bicharacter", i));
    std::vector<std::string> out;
    for (std::size_t k = 0; k < row.size(); ++k)
      out.push_back(as_scalar_text(row[k], child(child("/bicharacter", i), k)));
    c.bicharacter.push_back(std::move(out));
  }

  const json &gens = as_array(require(j, "generators", ""), "/generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string path = child("/generators", i);
    c.generators.push_back({as_string(require(gens[i], "name", path), child(path, "name")),
                            as_long_vector(require(gens[i], "degree", path),
                                           child(path, "degree"))});
  }
  c.max_len = as_size(require(j, "max_len", ""), "/max_len");

  if (const json *ders = optional_field(j, "derivations")) {
    as_array(*ders, "/derivations");
    for (std::size_t i = 0; i < ders->size(); ++i)
      c.derivations.push_back(read_map((*ders)[i], child("/derivations", i), "derivation"));
  }
  if (const json *maps = optional_field(j, "maps")) {
    as_array(*maps, "/maps");
    for (std::size_t i = 0; i < maps->size(); ++i)
      c.maps.push_back(read_map((*maps)[i], child("/maps", i), ""));
  }

  if (const json *f = optional_field(j, "cfun")) {
    CFunDecl d;
    d.kind = as_string(require(*f, "kind", "/cfun"), "/cfun/kind");
    if (d.kind == "sign_alternating") {
      d.functional = as_long_vector(require(*f, "functional", "/cfun"), "/cfun/functional");
    } else {
      const json &entries = as_array(require(*f, "entries", "/cfun"), "/cfun/entries");
      for (std::size_t i = 0; i < entries.size(); ++i) {
        std::string path = child("/cfun/entries", i);
        d.entries.push_back(
            {as_long_vector(require(entries[i], "g", path), child(path, "g")),
             as_long_vector(require(entries[i], "h", path), child(path, "h")),
             as_scalar_text(require(entries[i], "value", path), child(path, "value"))});
      }
    }
    c.cfun = std::move(d);
  }

  if (const json *pre = optional_field(j, "prechecks")) {
    as_array(*pre, "/prechecks");
    for (std::size_t i = 0; i < pre->size(); ++i) {
      std::string path = child("/prechecks", i);
      c.prechecks.push_back({as_string(require((*pre)[i], "map", path), child(path, "map")),
                             read_bounds((*pre)[i], path, c.max_len)});
    }
  }

  const json &suites = as_array(require(j, "suites", ""), "/suites");
  for (std::size_t i = 0; i < suites.size(); ++i) {
    std::string path = child("/suites", i);
    const json &s = suites[i];
    SuiteDecl d;
    d.id = as_string(require(s, "id", path), child(path, "id"));
    if (const json *m = optional_field(s, "map"))
      d.map = as_string(*m, child(path, "map"));
    d.mode = "report";
    if (const json *m = optional_field(s, "mode"))
      d.mode = as_string(*m, child(path, "mode"));
    d.bounds = read_bounds(s, path, c.max_len);
    c.suites.push_back(std::move(d));
  }

  if (const json *o = optional_field(j, "output"))
    c.output = as_string(*o, "/output");

  // Validate by building, then store canonical renderings.
  Instance inst = build_instance(c);
  const AlgebraSpec &spec = *inst.spec;
  for (std::size_t i = 0; i < c.bicharacter.size(); ++i)
    for (std::size_t k = 0; k < c.bicharacter[i].size(); ++k)
      c.bicharacter[i][k] = spec.chi().matrix()[i][k].str();
  for (std::size_t i = 0; i < c.generators.size(); ++i)
    c.generators[i].degree = spec.generators()[i].degree.coords;
  for (auto *list : {&c.derivations, &c.maps}) {
    for (auto &m : *list) {
      m.degree = c.group.make(m.degree).coords;
      std::map<std::string, std::string> canon;
      for (const auto &[k, v] : m.values) {
        std::string key =
            m.kind == "table" ? spec.render(parse_monomial_key(spec, k, "")) : k;
        canon[key] = parse_element(spec, v).str(spec);
      }
      m.values = std::move(canon);
    }
  }
  if (c.cfun)
    for (auto &e : c.cfun->entries) {
      e.value = parse_scalar(c.domain, e.value).str();
      e.g = c.group.make(e.g).coords;
      e.h = c.group.make(e.h).coords;
    }
  return c;
}

Config parse_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open config file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string());
}

json render_config(const Config &c) {
  json j;
  j["schema"] = c.schema;
  j["name"] = c.name;
  j["domain"] = render_domain(c.domain);
  j["group"] = json{{"free_rank", c.group.free_rank()}, {"torsion", c.group.torsion()}};
  j["bicharacter"] = c.bicharacter;
  json gens = json::array();
  for (const auto &g : c.generators)
    gens.push_back(json{{"name", g.name}, {"degree", g.degree}});
  j["generators"] = std::move(gens);
  j["max_len"] = c.max_len;
  auto render_maps = [](const std::vector<MapDecl> &list) {
    json out = json::array();
    for (const auto &m : list) {
      json mj{{"name", m.name}, {"kind", m.kind}, {"degree", m.degree}};
      if (m.kind == "composite")
        mj["expr"] = m.expr;
      else
        mj["values"] = m.values;
      out.push_back(std::move(mj));
    }
    return out;
  };
  j["derivations"] = render_maps(c.derivations);
  j["maps"] = render_maps(c.maps);
  if (c.cfun) {
    json f{{"kind", c.cfun->kind}};
    if (c.cfun->kind == "sign_alternating") {
      f["functional"] = c.cfun->functional;
    } else {
      json entries = json::array();
      for (const auto &e : c.cfun->entries)
        entries.push_back(json{{"g", e.g}, {"h", e.h}, {"value", e.value}});
      f["entries"] = std::move(entries);
    }
    j["cfun"] = std::move(f);
  }
  json pre = json::array();
  for (const auto &p : c.prechecks) {
    json pj = render_bounds(p.bounds);
    pj["map"] = p.map;
    pre.push_back(std::move(pj));
  }
  j["prechecks"] = std::move(pre);
  json suites = json::array();
  for (const auto &s : c.suites) {
    json sj = render_bounds(s.bounds);
    sj["id"] = s.id;
    if (!s.map.empty())
      sj["map"] = s.map;
    sj["mode"] = s.mode;
    suites.push_back(std::move(sj));
  }
  j["suites"] = std::move(suites);
  if (c.output)
    j["output"] = *c.output;
  return j;
}

std::string config_digest(const Config &config) {
  std::string canonical = render_config(config).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xF];
  }
  return out;
}

} // namespace bverify::cli
