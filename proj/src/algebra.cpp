#include "tpa/algebra.hpp"

#include <algorithm>
#include <set>

namespace tpa {

BasisSpace make_space(std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument("basis labels not unique");
  if (labels.empty()) throw std::invalid_argument("empty basis");
  BasisSpace s;
  s.dim = static_cast<int>(labels.size());
  s.labels = std::move(labels);
  return s;
}

Element zero_element(int dim, const Field& f) {
  return Element(static_cast<std::size_t>(dim), Scalar::zero(f));
}

Element basis_element(int dim, const Field& f, int i) {
  Element e = zero_element(dim, f);
  e[static_cast<std::size_t>(i)] = Scalar::one(f);
  return e;
}

bool is_zero_element(const Element& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& c) { return c.is_zero(); });
}

void add_scaled(Element& acc, const Scalar& c, const Element& v) {
  if (acc.size() != v.size()) throw std::logic_error("element size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] = acc[i] + c * v[i];
}

Element scaled(const Scalar& c, const Element& v) {
  Element out = v;
  for (auto& x : out) x = c * x;
  return out;
}

Element element_add(Element a, const Element& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
  return a;
}

Element element_sub(Element a, const Element& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
  return a;
}

Element element_neg(Element a) {
  for (auto& x : a) x = -x;
  return a;
}

std::string element_str(const Element& v, const BasisSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[i].is_one())
      out += space.labels[i];
    else
      out += v[i].str() + "*" + space.labels[i];
  }
  return out.empty() ? "0" : out;
}

std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::None: return "none";
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Alternating: return "alternating";
  }
  throw std::logic_error("bad symmetry tag");
}

Symmetry symmetry_from_name(const std::string& s) {
  if (s == "none") return Symmetry::None;
  if (s == "symmetric") return Symmetry::Symmetric;
  if (s == "alternating") return Symmetry::Alternating;
  throw std::invalid_argument("unknown symmetry: '" + s + "'");
}

namespace {

// Sorts idx in place; returns the permutation sign, or 0 when an index
// repeats (only alternating callers care).
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {  // insertion sort
    int v = idx[i];
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      --j;
      sign = -sign;
    }
    idx[j] = v;
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

}  // namespace

MultiLinearOp normalize_op(const MultiLinearOp& raw) {
  if (raw.arity < 1) throw std::invalid_argument("op arity must be >= 1");
  if (raw.dim < 1) throw std::invalid_argument("op dimension must be >= 1");
  if (!raw.field.is_rational() && raw.field.p <= raw.arity)
    throw std::invalid_argument("GF(" + std::to_string(raw.field.p) +
                                ") too small for arity " +
                                std::to_string(raw.arity) + " op '" +
                                raw.name + "'");
  MultiLinearOp op;
  op.name = raw.name;
  op.arity = raw.arity;
  op.symmetry = raw.symmetry;
  op.dim = raw.dim;
  op.field = raw.field;
  for (const auto& [key, val] : raw.table) {
    if (static_cast<int>(key.size()) != raw.arity)
      throw std::invalid_argument("op '" + raw.name + "': key arity mismatch");
    for (int i : key)
      if (i < 0 || i >= raw.dim)
        throw std::invalid_argument("op '" + raw.name +
                                    "': basis index out of range");
    if (static_cast<int>(val.size()) != raw.dim)
      throw std::invalid_argument("op '" + raw.name +
                                  "': value dimension mismatch");
    for (const Scalar& c : val)
      if (c.field() != raw.field)
        throw std::invalid_argument("op '" + raw.name +
                                    "': value field mismatch");

    std::vector<int> ckey = key;
    Element cval = val;
    if (raw.symmetry == Symmetry::Symmetric) {
      std::sort(ckey.begin(), ckey.end());
    } else if (raw.symmetry == Symmetry::Alternating) {
      int sign = sort_with_sign(ckey);
      if (sign == 0) {
        if (!is_zero_element(val))
          throw std::invalid_argument(
              "op '" + raw.name +
              "': alternating table has a nonzero entry on a repeated index");
        continue;
      }
      if (sign < 0) cval = scaled(-Scalar::one(raw.field), cval);
    }
    auto it = op.table.find(ckey);
    if (it == op.table.end()) {
      op.table.emplace(std::move(ckey), std::move(cval));
    } else if (!(it->second == cval)) {
      throw std::invalid_argument("op '" + raw.name +
                                  "': table inconsistent with symmetry tag");
    }
  }
  // Drop explicit zeros.
  for (auto it = op.table.begin(); it != op.table.end();) {
    if (is_zero_element(it->second))
      it = op.table.erase(it);
    else
      ++it;
  }
  return op;
}

MultiLinearOp make_op(std::string name, int arity, Symmetry sym, int dim,
                      const Field& f,
                      std::map<std::vector<int>, Element> table) {
  MultiLinearOp raw;
  raw.name = std::move(name);
  raw.arity = arity;
  raw.symmetry = sym;
  raw.dim = dim;
  raw.field = f;
  raw.table = std::move(table);
  return normalize_op(raw);
}

Element op_basis_value(const MultiLinearOp& op, const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != op.arity)
    throw std::invalid_argument("op '" + op.name + "': arity mismatch");
  std::vector<int> key = idx;
  int sign = 1;
  if (op.symmetry == Symmetry::Symmetric) {
    std::sort(key.begin(), key.end());
  } else if (op.symmetry == Symmetry::Alternating) {
    sign = sort_with_sign(key);
    if (sign == 0) return zero_element(op.dim, op.field);
  }
  auto it = op.table.find(key);
  if (it == op.table.end()) return zero_element(op.dim, op.field);
  if (sign < 0) return scaled(-Scalar::one(op.field), it->second);
  return it->second;
}

Element evaluate_op(const MultiLinearOp& op, const std::vector<Element>& args) {
  if (static_cast<int>(args.size()) != op.arity)
    throw std::invalid_argument("op '" + op.name + "': wrong argument count");
  // Support of each argument; multilinear expansion skips zero coordinates.
  std::vector<std::vector<int>> support(args.size());
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (static_cast<int>(args[j].size()) != op.dim)
      throw std::invalid_argument("op '" + op.name +
                                  "': argument dimension mismatch");
    for (int i = 0; i < op.dim; ++i)
      if (!args[j][static_cast<std::size_t>(i)].is_zero())
        support[j].push_back(i);
  }
  Element out = zero_element(op.dim, op.field);
  for (const auto& s : support)
    if (s.empty()) return out;

  std::vector<std::size_t> pos(args.size(), 0);
  std::vector<int> idx(args.size());
  for (;;) {
    Scalar coeff = Scalar::one(op.field);
    for (std::size_t j = 0; j < args.size(); ++j) {
      idx[j] = support[j][pos[j]];
      coeff = coeff * args[j][static_cast<std::size_t>(idx[j])];
    }
    Element v = op_basis_value(op, idx);
    if (!is_zero_element(v)) add_scaled(out, coeff, v);
    std::size_t j = args.size();
    while (j > 0) {
      --j;
      if (++pos[j] < support[j].size()) break;
      pos[j] = 0;
      if (j == 0) return out;
    }
  }
}

bool op_is_zero(const MultiLinearOp& op) { return op.table.empty(); }

LinearMap zero_map(int dim, const Field& f, std::string name) {
  LinearMap m;
  m.name = std::move(name);
  m.dim = dim;
  m.field = f;
  m.a.assign(static_cast<std::size_t>(dim) * dim, Scalar::zero(f));
  return m;
}

LinearMap identity_map(int dim, const Field& f, std::string name) {
  LinearMap m = zero_map(dim, f, std::move(name));
  for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Element apply_map(const LinearMap& m, const Element& v) {
  if (static_cast<int>(v.size()) != m.dim)
    throw std::invalid_argument("map dimension mismatch");
  Element out = zero_element(m.dim, m.field);
  for (int j = 0; j < m.dim; ++j) {
    const Scalar& c = v[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    for (int i = 0; i < m.dim; ++i)
      out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)] + c * m.at(i, j);
  }
  return out;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.dim != g.dim || f.field != g.field)
    throw std::invalid_argument("map composition mismatch");
  LinearMap out = zero_map(f.dim, f.field);
  for (int i = 0; i < f.dim; ++i)
    for (int k = 0; k < f.dim; ++k) {
      if (f.at(i, k).is_zero()) continue;
      for (int j = 0; j < f.dim; ++j)
        out.at(i, j) = out.at(i, j) + f.at(i, k) * g.at(k, j);
    }
  return out;
}

bool maps_commute(const LinearMap& f, const LinearMap& g) {
  return compose(f, g) == compose(g, f);
}

const MultiLinearOp* AlgebraBundle::find_op(const std::string& name) const {
  for (const auto& o : ops)
    if (o.name == name) return &o;
  return nullptr;
}

const LinearMap* AlgebraBundle::find_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

const MultiLinearOp& AlgebraBundle::op(const std::string& name) const {
  const auto* o = find_op(name);
  if (!o) throw std::out_of_range("no op named '" + name + "'");
  return *o;
}

const LinearMap& AlgebraBundle::map(const std::string& name) const {
  const auto* m = find_map(name);
  if (!m) throw std::out_of_range("no map named '" + name + "'");
  return *m;
}

void AlgebraBundle::add_op(MultiLinearOp op) {
  if (op.name.empty()) throw std::invalid_argument("op needs a name");
  if (find_op(op.name) || find_map(op.name))
    throw std::invalid_argument("duplicate name '" + op.name + "'");
  if (op.dim != space.dim || op.field != field)
    throw std::invalid_argument("op '" + op.name +
                                "' inconsistent with bundle space");
  ops.push_back(std::move(op));
}

void AlgebraBundle::add_map(LinearMap m) {
  if (m.name.empty()) throw std::invalid_argument("map needs a name");
  if (find_op(m.name) || find_map(m.name))
    throw std::invalid_argument("duplicate name '" + m.name + "'");
  if (m.dim != space.dim || m.field != field)
    throw std::invalid_argument("map '" + m.name +
                                "' inconsistent with bundle space");
  maps.push_back(std::move(m));
}

AlgebraBundle permute_basis(const AlgebraBundle& b,
                            const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != b.space.dim)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= b.space.dim || hit[static_cast<std::size_t>(p)])
      throw std::invalid_argument("not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  AlgebraBundle out;
  std::vector<std::string> labels(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    labels[static_cast<std::size_t>(perm[i])] = b.space.labels[i];
  out.space = make_space(std::move(labels));
  out.field = b.field;
  out.metadata = b.metadata;
  for (const auto& op : b.ops) {
    MultiLinearOp raw = op;
    raw.table.clear();
    for (const auto& [key, val] : op.table) {
      std::vector<int> nkey(key.size());
      for (std::size_t i = 0; i < key.size(); ++i)
        nkey[i] = perm[static_cast<std::size_t>(key[i])];
      Element nval = zero_element(op.dim, op.field);
      for (std::size_t i = 0; i < val.size(); ++i)
        nval[static_cast<std::size_t>(perm[i])] = val[i];
      raw.table.emplace(std::move(nkey), std::move(nval));
    }
    out.add_op(normalize_op(raw));
  }
  for (const auto& m : b.maps) {
    LinearMap nm = zero_map(m.dim, m.field, m.name);
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j)
        nm.at(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(j)]) = m.at(i, j);
    out.add_map(std::move(nm));
  }
  return out;
}

Scalar scalar_to_gf(const Scalar& s, const Field& gf) {
  if (gf.is_rational()) throw std::logic_error("target field must be GF(p)");
  const BigRational& q = s.rational();
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  auto p = boost::multiprecision::cpp_int(gf.p);
  if (den % p == 0)
    throw std::domain_error("denominator of " + s.str() +
                            " vanishes mod " + std::to_string(gf.p));
  auto nm = static_cast<std::int64_t>(num % p);
  auto dm = static_cast<std::int64_t>(den % p);
  return Scalar::from_residue(nm, gf) / Scalar::from_residue(dm, gf);
}

AlgebraBundle to_gf(const AlgebraBundle& b, std::int64_t p) {
  if (!b.field.is_rational())
    throw std::logic_error("to_gf expects a rational bundle");
  Field gf = Field::gf(p);
  AlgebraBundle out;
  out.space = b.space;
  out.field = gf;
  out.metadata = b.metadata;
  auto conv = [&](const Element& v) {
    Element w;
    w.reserve(v.size());
    for (const Scalar& c : v) w.push_back(scalar_to_gf(c, gf));
    return w;
  };
  for (const auto& op : b.ops) {
    MultiLinearOp raw = op;
    raw.field = gf;
    raw.table.clear();
    for (const auto& [key, val] : op.table) raw.table.emplace(key, conv(val));
    out.add_op(normalize_op(raw));
  }
  for (const auto& m : b.maps) {
    LinearMap nm = zero_map(m.dim, gf, m.name);
    for (std::size_t i = 0; i < m.a.size(); ++i)
      nm.a[i] = scalar_to_gf(m.a[i], gf);
    out.add_map(std::move(nm));
  }
  return out;
}

}  // namespace tpa
