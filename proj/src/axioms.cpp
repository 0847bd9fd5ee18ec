#include "tpa/axioms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace tpa {

namespace {

const std::vector<std::pair<Axiom, const char*>>& name_table() {
  static const std::vector<std::pair<Axiom, const char*>> t = {
      {Axiom::Commutativity, "commutativity"},
      {Axiom::Associativity, "associativity"},
      {Axiom::Jacobi, "jacobi"},
      {Axiom::Leibniz, "leibniz"},
      {Axiom::TransposedLeibniz, "transposed_leibniz"},
      {Axiom::Gi1, "gi1"},
      {Axiom::Gi2, "gi2"},
      {Axiom::Gi3, "gi3"},
      {Axiom::Gi4, "gi4"},
      {Axiom::Gi5, "gi5"},
      {Axiom::Gi6, "gi6"},
      {Axiom::PreLie, "prelie"},
      {Axiom::NovikovRight, "novikov_right"},
      {Axiom::Np1, "np1"},
      {Axiom::Np2, "np2"},
      {Axiom::PreLieCom, "prelie_com"},
      {Axiom::StrongPoisson, "strong_poisson"},
      {Axiom::FundamentalIdentity, "fundamental_identity"},
      {Axiom::Poisson3Lie, "poisson_3lie"},
      {Axiom::Strong3, "strong_3"},
      {Axiom::Transposed3Lie, "transposed_3lie"},
      {Axiom::TransposedNLie, "transposed_nlie"},
      {Axiom::HomJacobi, "hom_jacobi"},
      {Axiom::Varphi2, "varphi2"},
      {Axiom::Inter0, "inter0"},
      {Axiom::Mix3, "mix3"},
      {Axiom::Anti, "anti"},
      {Axiom::Const3Extra, "const3_extra"},
      {Axiom::AuxIdentity, "aux_identity"},
      {Axiom::DerivationOf, "derivation_of"},
      {Axiom::EndomorphismOf, "endomorphism_of"},
  };
  return t;
}

}  // namespace

std::string axiom_name(Axiom a) {
  for (const auto& [ax, n] : name_table())
    if (ax == a) return n;
  throw std::logic_error("axiom missing from name table");
}

Axiom axiom_from_name(const std::string& name) {
  for (const auto& [ax, n] : name_table())
    if (name == n) return ax;
  throw std::invalid_argument("unknown axiom '" + name + "'");
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> v = [] {
    std::vector<Axiom> out;
    for (const auto& [ax, n] : name_table()) out.push_back(ax);
    return out;
  }();
  return v;
}

std::string Binding::resolve(const std::string& role) const {
  auto it = roles.find(role);
  if (it != roles.end()) return it->second;
  if (role == "map") return "D";
  if (role == "op") return "mul";
  return role;
}

Binding Binding::parse(const std::vector<std::string>& role_eq_name) {
  static const char* known[] = {"mul", "bracket", "circ", "tri",
                                "map", "f",       "phi",  "op"};
  Binding b;
  for (const auto& s : role_eq_name) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
      throw std::invalid_argument("bad binding '" + s + "', expected role=name");
    std::string role = s.substr(0, eq);
    std::string name = s.substr(eq + 1);
    if (std::find(std::begin(known), std::end(known), role) == std::end(known))
      throw std::invalid_argument("unknown binding role '" + role + "'");
    if (!b.roles.emplace(role, name).second)
      throw std::invalid_argument("duplicate binding role '" + role + "'");
  }
  return b;
}

namespace {

const MultiLinearOp& need_op(const AlgebraBundle& b, const Binding& bind,
                             const std::string& role, int exact_arity,
                             int min_arity, bool must_alternate) {
  const std::string name = bind.resolve(role);
  const MultiLinearOp* op = b.find_op(name);
  if (!op)
    throw std::invalid_argument("role '" + role + "': no op named '" + name +
                                "' in bundle");
  if (exact_arity > 0 && op->arity != exact_arity)
    throw std::invalid_argument("role '" + role + "': op '" + name +
                                "' must have arity " +
                                std::to_string(exact_arity));
  if (min_arity > 0 && op->arity < min_arity)
    throw std::invalid_argument("role '" + role + "': op '" + name +
                                "' must have arity >= " +
                                std::to_string(min_arity));
  if (must_alternate && op->symmetry != Symmetry::Alternating)
    throw std::invalid_argument("role '" + role + "': op '" + name +
                                "' must be tagged alternating");
  return *op;
}

const LinearMap& need_map(const AlgebraBundle& b, const Binding& bind,
                          const std::string& role) {
  const std::string name = bind.resolve(role);
  const LinearMap* m = b.find_map(name);
  if (!m)
    throw std::invalid_argument("role '" + role + "': no map named '" + name +
                                "' in bundle");
  return *m;
}

void guard_invertible_factor(const Field& f, std::int64_t n,
                             const std::string& axiom) {
  if (!f.is_rational() && n % f.p == 0)
    throw std::invalid_argument(axiom + " needs " + std::to_string(n) +
                                " invertible, but the field is " +
                                f.describe());
}

// Resolved operation/map pointers plus evaluation helpers for one check run.
struct Ctx {
  const AlgebraBundle* b = nullptr;
  int dim = 0;
  Field field = Field::rationals();
  const MultiLinearOp* mul = nullptr;
  const MultiLinearOp* bracket = nullptr;
  const MultiLinearOp* circ = nullptr;
  const MultiLinearOp* tri = nullptr;
  const MultiLinearOp* op = nullptr;
  const LinearMap* map = nullptr;
  const LinearMap* f = nullptr;
  const LinearMap* phi = nullptr;
  std::vector<Element> basis;

  Scalar k(std::int64_t n) const { return Scalar::from_int(n, field); }
  Element zero() const { return zero_element(dim, field); }
  Element m(const Element& x, const Element& y) const {
    return evaluate_op(*mul, {x, y});
  }
  Element br(const Element& x, const Element& y) const {
    return evaluate_op(*bracket, {x, y});
  }
  Element c(const Element& x, const Element& y) const {
    return evaluate_op(*circ, {x, y});
  }
  Element t3(const Element& x, const Element& y, const Element& z) const {
    return evaluate_op(*tri, {x, y, z});
  }
  Element tn(const std::vector<Element>& args) const {
    return evaluate_op(*tri, args);
  }
  Element D(const Element& x) const { return apply_map(*map, x); }
  Element fv(const Element& x) const { return apply_map(*f, x); }
  Element ph(const Element& x) const { return apply_map(*phi, x); }
};

Ctx make_ctx(const AlgebraBundle& b, Axiom ax, const Binding& bind) {
  Ctx c;
  c.b = &b;
  c.dim = b.space.dim;
  c.field = b.field;
  auto want_mul = [&] { c.mul = &need_op(b, bind, "mul", 2, 0, false); };
  auto want_bracket = [&] {
    c.bracket = &need_op(b, bind, "bracket", 2, 0, true);
  };
  auto want_circ = [&] { c.circ = &need_op(b, bind, "circ", 2, 0, false); };
  auto want_tri3 = [&] { c.tri = &need_op(b, bind, "tri", 3, 0, true); };
  auto want_trin = [&] { c.tri = &need_op(b, bind, "tri", 0, 2, true); };
  switch (ax) {
    case Axiom::Commutativity:
    case Axiom::Associativity:
      want_mul();
      break;
    case Axiom::Jacobi:
      want_bracket();
      break;
    case Axiom::Leibniz:
    case Axiom::TransposedLeibniz:
    case Axiom::Gi1:
    case Axiom::Gi2:
    case Axiom::Gi3:
    case Axiom::Gi4:
    case Axiom::Gi5:
    case Axiom::Gi6:
    case Axiom::StrongPoisson:
    case Axiom::Inter0:
      want_mul();
      want_bracket();
      break;
    case Axiom::PreLie:
    case Axiom::NovikovRight:
      want_circ();
      break;
    case Axiom::Np1:
    case Axiom::Np2:
    case Axiom::PreLieCom:
      want_mul();
      want_circ();
      break;
    case Axiom::FundamentalIdentity:
      want_trin();
      break;
    case Axiom::Poisson3Lie:
    case Axiom::Strong3:
    case Axiom::Transposed3Lie:
    case Axiom::Mix3:
      want_mul();
      want_tri3();
      break;
    case Axiom::TransposedNLie:
      want_mul();
      want_trin();
      break;
    case Axiom::HomJacobi:
    case Axiom::Varphi2:
      want_bracket();
      c.phi = &need_map(b, bind, "phi");
      break;
    case Axiom::Anti:
      want_bracket();
      c.f = &need_map(b, bind, "f");
      break;
    case Axiom::Const3Extra:
      want_mul();
      want_bracket();
      c.f = &need_map(b, bind, "f");
      break;
    case Axiom::AuxIdentity:
      want_mul();
      want_bracket();
      c.map = &need_map(b, bind, "map");
      break;
    case Axiom::DerivationOf:
    case Axiom::EndomorphismOf:
      c.op = &need_op(b, bind, "op", 0, 1, false);
      c.map = &need_map(b, bind, "map");
      break;
  }
  if (ax == Axiom::TransposedLeibniz || ax == Axiom::Gi5)
    guard_invertible_factor(c.field, 2, axiom_name(ax));
  if (ax == Axiom::Transposed3Lie)
    guard_invertible_factor(c.field, 3, axiom_name(ax));
  if (ax == Axiom::TransposedNLie)
    guard_invertible_factor(c.field, c.tri->arity, axiom_name(ax));
  c.basis.reserve(static_cast<std::size_t>(c.dim));
  for (int i = 0; i < c.dim; ++i)
    c.basis.push_back(basis_element(c.dim, c.field, i));
  return c;
}

using Vars = std::vector<const Element*>;
using SidePair = std::pair<Element, Element>;

// Variable slots enumerated together. Within a strict group only strictly
// increasing index tuples are visited, within a non-strict group
// non-decreasing ones; omitted tuples are implied by the operation symmetries
// (each identity's grouping is chosen so both sides transform alike).
struct Group {
  std::vector<int> slots;
  bool strict = false;
};

struct PartSpec {
  std::string part;  // sub-identity name, "" for single-part axioms
  int nvars = 0;
  std::vector<Group> groups;
  std::function<SidePair(const Ctx&, const Vars&)> eval;
};

Group single(int slot) { return Group{{slot}, false}; }

std::vector<Group> pair_groups(int s0, int s1, bool fuse, bool strict) {
  if (fuse) return {Group{{s0, s1}, strict}};
  return {single(s0), single(s1)};
}

std::vector<PartSpec> axiom_parts(Axiom ax, const Ctx& c) {
  const bool msym = c.mul && c.mul->symmetry == Symmetry::Symmetric;
  std::vector<PartSpec> parts;
  auto add = [&](std::string part, int nvars, std::vector<Group> groups,
                 std::function<SidePair(const Ctx&, const Vars&)> eval) {
    parts.push_back(
        PartSpec{std::move(part), nvars, std::move(groups), std::move(eval)});
  };

  switch (ax) {
    case Axiom::Commutativity:
      add("", 2, {Group{{0, 1}, true}}, [](const Ctx& c, const Vars& v) {
        return SidePair(c.m(*v[0], *v[1]), c.m(*v[1], *v[0]));
      });
      break;

    case Axiom::Associativity: {
      std::vector<Group> g;
      if (msym)
        g = {Group{{0, 2}, true}, single(1)};
      else
        g = {single(0), single(1), single(2)};
      add("", 3, std::move(g), [](const Ctx& c, const Vars& v) {
        return SidePair(c.m(c.m(*v[0], *v[1]), *v[2]),
                        c.m(*v[0], c.m(*v[1], *v[2])));
      });
      break;
    }

    case Axiom::Jacobi:
      add("", 3, {Group{{0, 1, 2}, true}}, [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1], &z = *v[2];
        Element l = element_add(
            element_add(c.br(c.br(x, y), z), c.br(c.br(y, z), x)),
            c.br(c.br(z, x), y));
        return SidePair(std::move(l), c.zero());
      });
      break;

    case Axiom::Leibniz: {
      std::vector<Group> g{single(0)};
      for (auto& gg : pair_groups(1, 2, msym, false)) g.push_back(gg);
      add("", 3, std::move(g), [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1], &z = *v[2];
        Element r = element_add(c.m(c.br(x, y), z), c.m(y, c.br(x, z)));
        return SidePair(c.br(x, c.m(y, z)), std::move(r));
      });
      break;
    }

    case Axiom::TransposedLeibniz:
      add("", 3, {Group{{0, 1}, true}, single(2)},
          [](const Ctx& c, const Vars& v) {
            const Element &x = *v[0], &y = *v[1], &z = *v[2];
            Element l = scaled(c.k(2), c.m(z, c.br(x, y)));
            Element r = element_add(c.br(c.m(z, x), y), c.br(x, c.m(z, y)));
            return SidePair(std::move(l), std::move(r));
          });
      break;

    case Axiom::Gi1:
      add("", 3, {Group{{0, 1, 2}, true}}, [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1], &z = *v[2];
        Element l =
            element_add(element_add(c.m(x, c.br(y, z)), c.m(y, c.br(z, x))),
                        c.m(z, c.br(x, y)));
        return SidePair(std::move(l), c.zero());
      });
      break;

    case Axiom::Gi2:
      add("", 4, {single(0), Group{{1, 2, 3}, true}},
          [](const Ctx& c, const Vars& v) {
            const Element &h = *v[0], &x = *v[1], &y = *v[2], &z = *v[3];
            Element l = element_add(
                element_add(c.br(c.m(h, c.br(x, y)), z),
                            c.br(c.m(h, c.br(y, z)), x)),
                c.br(c.m(h, c.br(z, x)), y));
            return SidePair(std::move(l), c.zero());
          });
      break;

    case Axiom::Gi3:
      add("", 4, {single(0), Group{{1, 2, 3}, true}},
          [](const Ctx& c, const Vars& v) {
            const Element &h = *v[0], &x = *v[1], &y = *v[2], &z = *v[3];
            Element l = element_add(
                element_add(c.br(c.m(h, x), c.br(y, z)),
                            c.br(c.m(h, y), c.br(z, x))),
                c.br(c.m(h, z), c.br(x, y)));
            return SidePair(std::move(l), c.zero());
          });
      break;

    case Axiom::Gi4:
    case Axiom::StrongPoisson:
      add("", 4, {single(0), Group{{1, 2, 3}, true}},
          [](const Ctx& c, const Vars& v) {
            const Element &h = *v[0], &x = *v[1], &y = *v[2], &z = *v[3];
            Element l = element_add(
                element_add(c.m(c.br(h, x), c.br(y, z)),
                            c.m(c.br(h, y), c.br(z, x))),
                c.m(c.br(h, z), c.br(x, y)));
            return SidePair(std::move(l), c.zero());
          });
      break;

    case Axiom::Gi5: {
      std::vector<Group> g{Group{{0, 1}, true}};
      for (auto& gg : pair_groups(2, 3, msym, false)) g.push_back(gg);
      add("", 4, std::move(g), [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1], &u = *v[2], &w = *v[3];
        Element l =
            element_add(c.br(c.m(x, u), c.m(y, w)), c.br(c.m(x, w), c.m(y, u)));
        Element r = scaled(c.k(2), c.m(c.m(u, w), c.br(x, y)));
        return SidePair(std::move(l), std::move(r));
      });
      break;
    }

    case Axiom::Gi6:
      add("", 4, {single(0), single(1), single(2), single(3)},
          [](const Ctx& c, const Vars& v) {
            const Element &x = *v[0], &y = *v[1], &u = *v[2], &w = *v[3];
            Element l = element_add(
                element_add(c.m(x, c.br(u, c.m(y, w))),
                            c.m(w, c.br(c.m(x, y), u))),
                c.m(c.m(y, u), c.br(w, x)));
            return SidePair(std::move(l), c.zero());
          });
      break;

    case Axiom::PreLie:
      add("", 3, {Group{{0, 1}, true}, single(2)},
          [](const Ctx& c, const Vars& v) {
            const Element &x = *v[0], &y = *v[1], &z = *v[2];
            Element l = element_sub(c.c(c.c(x, y), z), c.c(c.c(y, x), z));
            Element r = element_sub(c.c(x, c.c(y, z)), c.c(y, c.c(x, z)));
            return SidePair(std::move(l), std::move(r));
          });
      break;

    case Axiom::NovikovRight:
      // Swapping y and z exchanges the two sides, so one representative per
      // unordered pair suffices regardless of symmetry tags.
      add("", 3, {single(0), Group{{1, 2}, false}},
          [](const Ctx& c, const Vars& v) {
            const Element &x = *v[0], &y = *v[1], &z = *v[2];
            return SidePair(c.c(c.c(x, y), z), c.c(c.c(x, z), y));
          });
      break;

    case Axiom::Np1:
      add("", 3, {single(0), single(1), single(2)},
          [](const Ctx& c, const Vars& v) {
            const Element &x = *v[0], &y = *v[1], &z = *v[2];
            return SidePair(c.c(c.m(x, y), z), c.m(x, c.c(y, z)));
          });
      break;

    case Axiom::Np2:
      add("", 3, {Group{{0, 1}, true}, single(2)},
          [](const Ctx& c, const Vars& v) {
            const Element &x = *v[0], &y = *v[1], &z = *v[2];
            Element l = element_sub(c.m(c.c(x, y), z), c.m(c.c(y, x), z));
            Element r = element_sub(c.c(x, c.m(y, z)), c.c(y, c.m(x, z)));
            return SidePair(std::move(l), std::move(r));
          });
      break;

    case Axiom::PreLieCom: {
      std::vector<Group> g{single(0)};
      for (auto& gg : pair_groups(1, 2, msym, false)) g.push_back(gg);
      add("", 3, std::move(g), [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1], &z = *v[2];
        Element r = element_add(c.m(c.c(x, y), z), c.m(y, c.c(x, z)));
        return SidePair(c.c(x, c.m(y, z)), std::move(r));
      });
      break;
    }

    case Axiom::FundamentalIdentity: {
      const int n = c.tri->arity;
      std::vector<int> xslots, uslots;
      for (int i = 0; i < n; ++i) xslots.push_back(i);
      for (int i = n; i < 2 * n - 1; ++i) uslots.push_back(i);
      add("", 2 * n - 1,
          {Group{std::move(xslots), true}, Group{std::move(uslots), true}},
          [n](const Ctx& c, const Vars& v) {
            std::vector<Element> xs;
            xs.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) xs.push_back(*v[i]);
            std::vector<Element> outer;
            outer.reserve(static_cast<std::size_t>(n));
            outer.push_back(c.tn(xs));
            for (int j = 0; j < n - 1; ++j) outer.push_back(*v[n + j]);
            Element l = c.tn(outer);
            Element r = c.zero();
            for (int i = 0; i < n; ++i) {
              std::vector<Element> inner;
              inner.reserve(static_cast<std::size_t>(n));
              inner.push_back(xs[static_cast<std::size_t>(i)]);
              for (int j = 0; j < n - 1; ++j) inner.push_back(*v[n + j]);
              std::vector<Element> a = xs;
              a[static_cast<std::size_t>(i)] = c.tn(inner);
              r = element_add(std::move(r), c.tn(a));
            }
            return SidePair(std::move(l), std::move(r));
          });
      break;
    }

    case Axiom::Poisson3Lie: {
      std::vector<Group> g{Group{{0, 1}, true}};
      for (auto& gg : pair_groups(2, 3, msym, false)) g.push_back(gg);
      add("", 4, std::move(g), [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1], &u = *v[2], &w = *v[3];
        Element l = c.t3(x, y, c.m(u, w));
        Element r =
            element_add(c.m(u, c.t3(x, y, w)), c.m(c.t3(x, y, u), w));
        return SidePair(std::move(l), std::move(r));
      });
      break;
    }

    case Axiom::Strong3:
      add("", 6, {Group{{0, 1}, true}, Group{{2, 3, 4, 5}, true}},
          [](const Ctx& c, const Vars& v) {
            const Element &x = *v[0], &y = *v[1];
            const Element &u1 = *v[2], &u2 = *v[3], &u3 = *v[4], &u4 = *v[5];
            Element l = element_neg(c.m(c.t3(x, y, u1), c.t3(u2, u3, u4)));
            l = element_add(std::move(l),
                            c.m(c.t3(x, y, u2), c.t3(u1, u3, u4)));
            l = element_sub(std::move(l),
                            c.m(c.t3(x, y, u3), c.t3(u1, u2, u4)));
            l = element_add(std::move(l),
                            c.m(c.t3(x, y, u4), c.t3(u1, u2, u3)));
            return SidePair(std::move(l), c.zero());
          });
      break;

    case Axiom::Transposed3Lie:
      add("", 4, {Group{{0, 1, 2}, true}, single(3)},
          [](const Ctx& c, const Vars& v) {
            const Element &x = *v[0], &y = *v[1], &z = *v[2], &u = *v[3];
            Element l = scaled(c.k(3), c.m(u, c.t3(x, y, z)));
            Element r = element_add(
                element_add(c.t3(c.m(x, u), y, z), c.t3(x, c.m(y, u), z)),
                c.t3(x, y, c.m(z, u)));
            return SidePair(std::move(l), std::move(r));
          });
      break;

    case Axiom::TransposedNLie: {
      const int n = c.tri->arity;
      std::vector<int> xs;
      for (int i = 0; i < n; ++i) xs.push_back(i);
      add("", n + 1, {Group{std::move(xs), true}, single(n)},
          [n](const Ctx& c, const Vars& v) {
            std::vector<Element> args;
            args.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) args.push_back(*v[i]);
            const Element& w = *v[n];
            Element l = scaled(c.k(n), c.m(w, c.tn(args)));
            Element r = c.zero();
            for (int i = 0; i < n; ++i) {
              std::vector<Element> a = args;
              a[static_cast<std::size_t>(i)] = c.m(w, args[i]);
              r = element_add(std::move(r), c.tn(a));
            }
            return SidePair(std::move(l), std::move(r));
          });
      break;
    }

    case Axiom::HomJacobi:
      add("", 3, {Group{{0, 1, 2}, true}}, [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1], &z = *v[2];
        Element l = element_add(
            element_add(c.br(c.ph(x), c.br(y, z)), c.br(c.ph(y), c.br(z, x))),
            c.br(c.ph(z), c.br(x, y)));
        return SidePair(std::move(l), c.zero());
      });
      break;

    case Axiom::Varphi2:
      add("", 2, {Group{{0, 1}, true}}, [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1];
        return SidePair(c.ph(c.ph(c.br(x, y))), c.br(c.ph(x), c.ph(y)));
      });
      break;

    case Axiom::Inter0:
      add("product-bracket", 3, {single(0), Group{{1, 2}, true}},
          [](const Ctx& c, const Vars& v) {
            return SidePair(c.m(*v[0], c.br(*v[1], *v[2])), c.zero());
          });
      {
        std::vector<Group> g = pair_groups(0, 1, msym, false);
        g.push_back(single(2));
        add("bracket-product", 3, std::move(g),
            [](const Ctx& c, const Vars& v) {
              return SidePair(c.br(c.m(*v[0], *v[1]), *v[2]), c.zero());
            });
      }
      break;

    case Axiom::Mix3:
      add("product-bracket", 4, {single(0), Group{{1, 2, 3}, true}},
          [](const Ctx& c, const Vars& v) {
            return SidePair(c.m(*v[0], c.t3(*v[1], *v[2], *v[3])), c.zero());
          });
      {
        std::vector<Group> g = pair_groups(0, 1, msym, false);
        g.push_back(Group{{2, 3}, true});
        add("bracket-product", 4, std::move(g),
            [](const Ctx& c, const Vars& v) {
              return SidePair(c.t3(c.m(*v[0], *v[1]), *v[2], *v[3]), c.zero());
            });
      }
      break;

    case Axiom::Anti:
      add("involution", 1, {single(0)}, [](const Ctx& c, const Vars& v) {
        return SidePair(c.fv(c.fv(*v[0])), *v[0]);
      });
      add("anti", 2, {Group{{0, 1}, true}}, [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1];
        return SidePair(c.fv(c.br(x, y)),
                        element_neg(c.br(c.fv(x), c.fv(y))));
      });
      break;

    case Axiom::Const3Extra:
      add("", 4, {single(0), Group{{1, 2, 3}, true}},
          [](const Ctx& c, const Vars& v) {
            const Element &u = *v[0], &x = *v[1], &y = *v[2], &z = *v[3];
            Element s = element_add(
                element_add(c.m(c.fv(x), c.br(y, z)),
                            c.m(c.fv(y), c.br(z, x))),
                c.m(c.fv(z), c.br(x, y)));
            Element l = c.m(element_sub(c.fv(u), u), s);
            return SidePair(std::move(l), c.zero());
          });
      break;

    case Axiom::AuxIdentity:
      add("", 3, {Group{{0, 1, 2}, true}}, [](const Ctx& c, const Vars& v) {
        const Element &x = *v[0], &y = *v[1], &z = *v[2];
        Element l = element_add(
            element_add(c.m(c.D(x), c.D(c.br(y, z))),
                        c.m(c.D(y), c.D(c.br(z, x)))),
            c.m(c.D(z), c.D(c.br(x, y))));
        Element r = element_neg(element_add(
            element_add(c.m(x, c.br(c.D(y), c.D(z))),
                        c.m(y, c.br(c.D(z), c.D(x)))),
            c.m(z, c.br(c.D(x), c.D(y)))));
        return SidePair(std::move(l), std::move(r));
      });
      break;

    case Axiom::DerivationOf: {
      const int k = c.op->arity;
      std::vector<int> slots;
      for (int i = 0; i < k; ++i) slots.push_back(i);
      std::vector<Group> g;
      if (c.op->symmetry == Symmetry::Symmetric)
        g = {Group{std::move(slots), false}};
      else if (c.op->symmetry == Symmetry::Alternating)
        g = {Group{std::move(slots), true}};
      else
        for (int i = 0; i < k; ++i) g.push_back(single(i));
      add("", k, std::move(g), [k](const Ctx& c, const Vars& v) {
        std::vector<Element> args;
        args.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) args.push_back(*v[i]);
        Element l = c.D(evaluate_op(*c.op, args));
        Element r = c.zero();
        for (int i = 0; i < k; ++i) {
          std::vector<Element> a = args;
          a[static_cast<std::size_t>(i)] = c.D(args[i]);
          r = element_add(std::move(r), evaluate_op(*c.op, a));
        }
        return SidePair(std::move(l), std::move(r));
      });
      break;
    }

    case Axiom::EndomorphismOf: {
      const int k = c.op->arity;
      std::vector<int> slots;
      for (int i = 0; i < k; ++i) slots.push_back(i);
      std::vector<Group> g;
      if (c.op->symmetry == Symmetry::Symmetric)
        g = {Group{std::move(slots), false}};
      else if (c.op->symmetry == Symmetry::Alternating)
        g = {Group{std::move(slots), true}};
      else
        for (int i = 0; i < k; ++i) g.push_back(single(i));
      add("", k, std::move(g), [k](const Ctx& c, const Vars& v) {
        std::vector<Element> args;
        args.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) args.push_back(*v[i]);
        Element l = c.D(evaluate_op(*c.op, args));
        std::vector<Element> mapped;
        mapped.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) mapped.push_back(c.D(args[i]));
        return SidePair(std::move(l), evaluate_op(*c.op, mapped));
      });
      break;
    }
  }
  return parts;
}

// Per-group index assignments in lexicographic order.
std::vector<std::vector<int>> group_assignments(const Group& g, int dim) {
  std::vector<std::vector<int>> out;
  const int k = static_cast<int>(g.slots.size());
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < dim; ++i) {
      cur[static_cast<std::size_t>(pos)] = i;
      rec(pos + 1, g.strict ? i + 1 : i);
    }
  };
  rec(0, 0);
  return out;
}

// Visits the pruned tuple set; true when every visited tuple satisfies the
// identity. An empty strict group (more slots than dimension) makes the part
// vacuous: every full tuple then repeats an index inside an alternating
// block, where both sides vanish.
bool canonical_pass(const Ctx& c, const PartSpec& p, long long& count) {
  std::vector<std::vector<std::vector<int>>> choices;
  choices.reserve(p.groups.size());
  for (const auto& g : p.groups) {
    choices.push_back(group_assignments(g, c.dim));
    if (choices.back().empty()) return true;
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<int> tuple(static_cast<std::size_t>(p.nvars), 0);
  Vars v(static_cast<std::size_t>(p.nvars));
  while (true) {
    for (std::size_t gi = 0; gi < choices.size(); ++gi) {
      const auto& slots = p.groups[gi].slots;
      const auto& asg = choices[gi][idx[gi]];
      for (std::size_t j = 0; j < slots.size(); ++j)
        tuple[static_cast<std::size_t>(slots[j])] = asg[j];
    }
    for (int s = 0; s < p.nvars; ++s)
      v[static_cast<std::size_t>(s)] =
          &c.basis[static_cast<std::size_t>(tuple[static_cast<std::size_t>(s)])];
    ++count;
    auto [l, r] = p.eval(c, v);
    if (l != r) return false;
    std::size_t gi = choices.size();
    while (gi > 0) {
      --gi;
      if (++idx[gi] < choices[gi].size()) break;
      idx[gi] = 0;
      if (gi == 0) return true;
    }
  }
}

// Full scan in lexicographic tuple order; returns the first violation.
std::optional<ViolationWitness> full_scan(const Ctx& c, const PartSpec& p,
                                          long long& count) {
  std::vector<int> tuple(static_cast<std::size_t>(p.nvars), 0);
  Vars v(static_cast<std::size_t>(p.nvars));
  while (true) {
    for (int s = 0; s < p.nvars; ++s)
      v[static_cast<std::size_t>(s)] =
          &c.basis[static_cast<std::size_t>(tuple[static_cast<std::size_t>(s)])];
    ++count;
    auto [l, r] = p.eval(c, v);
    if (l != r)
      return ViolationWitness{p.part, tuple, std::move(l), std::move(r)};
    int s = p.nvars - 1;
    while (s >= 0 && ++tuple[static_cast<std::size_t>(s)] == c.dim) {
      tuple[static_cast<std::size_t>(s)] = 0;
      --s;
    }
    if (s < 0) return std::nullopt;
  }
}

}  // namespace

CheckReport check_identity(const AlgebraBundle& bundle, Axiom axiom,
                           const Binding& binding, const CheckOptions& opts) {
  const Ctx c = make_ctx(bundle, axiom, binding);
  CheckReport rep;
  rep.axiom = axiom;
  rep.holds = true;
  for (const auto& p : axiom_parts(axiom, c)) {
    if (opts.prune) {
      if (canonical_pass(c, p, rep.tuples_checked)) continue;
      // Rescan in plain order so witnesses do not depend on the pruning.
      auto w = full_scan(c, p, rep.tuples_checked);
      if (!w)
        throw std::logic_error(
            "pruned scan found a violation the full scan missed");
      rep.holds = false;
      rep.witness = std::move(*w);
      return rep;
    }
    auto w = full_scan(c, p, rep.tuples_checked);
    if (w) {
      rep.holds = false;
      rep.witness = std::move(*w);
      return rep;
    }
  }
  return rep;
}

std::pair<Element, Element> evaluate_identity_at(const AlgebraBundle& bundle,
                                                 Axiom axiom,
                                                 const Binding& binding,
                                                 const std::vector<int>& tuple,
                                                 const std::string& part) {
  const Ctx c = make_ctx(bundle, axiom, binding);
  const auto parts = axiom_parts(axiom, c);
  const PartSpec* chosen = nullptr;
  if (part.empty()) {
    chosen = &parts.front();
  } else {
    for (const auto& p : parts)
      if (p.part == part) {
        chosen = &p;
        break;
      }
    if (!chosen)
      throw std::invalid_argument("axiom " + axiom_name(axiom) +
                                  " has no part '" + part + "'");
  }
  if (static_cast<int>(tuple.size()) != chosen->nvars)
    throw std::invalid_argument(
        "axiom " + axiom_name(axiom) +
        (chosen->part.empty() ? std::string() : " part " + chosen->part) +
        " takes " + std::to_string(chosen->nvars) + " basis indices");
  Vars v(tuple.size());
  for (std::size_t s = 0; s < tuple.size(); ++s) {
    if (tuple[s] < 0 || tuple[s] >= c.dim)
      throw std::invalid_argument("basis index " + std::to_string(tuple[s]) +
                                  " out of range for dimension " +
                                  std::to_string(c.dim));
    v[s] = &c.basis[static_cast<std::size_t>(tuple[s])];
  }
  return chosen->eval(c, v);
}

const std::vector<std::string>& profile_names() {
  static const std::vector<std::string> v = {
      "poisson",
      "transposed-poisson",
      "novikov-poisson",
      "prelie-poisson",
      "prelie-com",
      "differential-novikov-poisson",
      "strong-poisson",
      "poisson-3lie",
      "strong-poisson-3lie",
      "tpa-3lie",
      "tpa-nlie",
      "hom-lie",
  };
  return v;
}

const std::vector<Axiom>& profile_axioms(const std::string& profile) {
  static const std::map<std::string, std::vector<Axiom>> table = {
      {"poisson",
       {Axiom::Commutativity, Axiom::Associativity, Axiom::Jacobi,
        Axiom::Leibniz}},
      {"transposed-poisson",
       {Axiom::Commutativity, Axiom::Associativity, Axiom::Jacobi,
        Axiom::TransposedLeibniz}},
      {"novikov-poisson",
       {Axiom::Commutativity, Axiom::Associativity, Axiom::PreLie,
        Axiom::NovikovRight, Axiom::Np1, Axiom::Np2}},
      {"prelie-poisson",
       {Axiom::Commutativity, Axiom::Associativity, Axiom::PreLie, Axiom::Np1,
        Axiom::Np2}},
      {"prelie-com",
       {Axiom::Commutativity, Axiom::Associativity, Axiom::PreLie,
        Axiom::PreLieCom}},
      {"differential-novikov-poisson",
       {Axiom::Commutativity, Axiom::Associativity, Axiom::PreLie,
        Axiom::NovikovRight, Axiom::Np1, Axiom::Np2, Axiom::PreLieCom}},
      {"strong-poisson",
       {Axiom::Commutativity, Axiom::Associativity, Axiom::Jacobi,
        Axiom::Leibniz, Axiom::StrongPoisson}},
      {"poisson-3lie",
       {Axiom::Commutativity, Axiom::Associativity,
        Axiom::FundamentalIdentity, Axiom::Poisson3Lie}},
      {"strong-poisson-3lie",
       {Axiom::Commutativity, Axiom::Associativity,
        Axiom::FundamentalIdentity, Axiom::Poisson3Lie, Axiom::Strong3}},
      {"tpa-3lie",
       {Axiom::Commutativity, Axiom::Associativity,
        Axiom::FundamentalIdentity, Axiom::Transposed3Lie}},
      {"tpa-nlie",
       {Axiom::Commutativity, Axiom::Associativity,
        Axiom::FundamentalIdentity, Axiom::TransposedNLie}},
      {"hom-lie", {Axiom::HomJacobi}},
  };
  auto it = table.find(profile);
  if (it == table.end())
    throw std::invalid_argument("unknown profile '" + profile + "'");
  return it->second;
}

std::vector<CheckReport> check_profile(const AlgebraBundle& bundle,
                                       const std::string& profile,
                                       const Binding& binding,
                                       const CheckOptions& opts) {
  std::vector<CheckReport> out;
  for (Axiom a : profile_axioms(profile))
    out.push_back(check_identity(bundle, a, binding, opts));
  return out;
}

bool profile_passes(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

}  // namespace tpa
