#include "tpa/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace tpa {

namespace {

std::string display(const std::string& name, const char* fallback) {
  return name.empty() ? std::string(fallback) : name;
}

std::vector<std::string> generic_labels(int d) {
  std::vector<std::string> v;
  v.reserve(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) v.push_back("e" + std::to_string(i));
  return v;
}

MultiLinearOp renamed(const MultiLinearOp& op, std::string name) {
  MultiLinearOp c = op;
  c.name = std::move(name);
  return c;
}

LinearMap renamed(const LinearMap& m, std::string name) {
  LinearMap c = m;
  c.name = std::move(name);
  return c;
}

void require_bilinear(const std::string& ctx, const MultiLinearOp& op) {
  if (op.arity != 2)
    throw std::invalid_argument(ctx + ": op '" + display(op.name, "op") +
                                "' must have arity 2");
}

void require_symmetric_product(const std::string& ctx,
                               const MultiLinearOp& mul) {
  require_bilinear(ctx, mul);
  if (mul.symmetry != Symmetry::Symmetric)
    throw std::invalid_argument(ctx + ": product '" +
                                display(mul.name, "mul") +
                                "' must be tagged symmetric");
}

void require_same_space(const std::string& ctx, int dim, const Field& f,
                        int other_dim, const Field& other_f,
                        const std::string& what) {
  if (dim != other_dim || !(f == other_f))
    throw std::invalid_argument(ctx + ": " + what +
                                " lives on a different space");
}

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Throws with the failing reports of a named profile.
void require_profile(const AlgebraBundle& b, const std::string& profile,
                     const std::string& ctx) {
  auto reports = check_profile(b, profile);
  std::vector<CheckReport> bad;
  for (auto& r : reports)
    if (!r.holds) bad.push_back(r);
  if (bad.empty()) return;
  std::string msg = ctx + ": input fails " + profile + " (" +
                    axiom_name(bad.front().axiom);
  if (bad.front().witness)
    msg += " at basis tuple " + tuple_str(bad.front().witness->tuple);
  msg += ")";
  throw PreconditionError(msg, std::move(bad));
}

// Bundle with canonical op names for profile and identity checks.
AlgebraBundle pair_bundle(const std::string& ctx, const MultiLinearOp& mul,
                          const MultiLinearOp& bracket) {
  require_symmetric_product(ctx, mul);
  require_bilinear(ctx, bracket);
  require_same_space(ctx, mul.dim, mul.field, bracket.dim, bracket.field,
                     "bracket '" + display(bracket.name, "bracket") + "'");
  AlgebraBundle b;
  b.space = make_space(generic_labels(mul.dim));
  b.field = mul.field;
  b.add_op(renamed(mul, "mul"));
  b.add_op(renamed(bracket, "bracket"));
  return b;
}

void require_derivation(const std::string& ctx, const MultiLinearOp& op,
                        const LinearMap& D) {
  require_same_space(ctx, op.dim, op.field, D.dim, D.field,
                     "map '" + display(D.name, "D") + "'");
  AlgebraBundle b;
  b.space = make_space(generic_labels(op.dim));
  b.field = op.field;
  b.add_op(renamed(op, "the_op"));
  b.add_map(renamed(D, "the_map"));
  auto rep = check_identity(b, Axiom::DerivationOf,
                            Binding{{{"op", "the_op"}, {"map", "the_map"}}});
  if (!rep.holds)
    throw PreconditionError(
        ctx + ": '" + display(D.name, "D") + "' is not a derivation of '" +
            display(op.name, "op") + "'" +
            (rep.witness
                 ? " (fails at basis tuple " + tuple_str(rep.witness->tuple) +
                       ")"
                 : ""),
        {rep});
}

Element product(const MultiLinearOp& mul, const Element& x,
                const Element& y) {
  return evaluate_op(mul, {x, y});
}

// sum over cyclic assignments of g(x)*[y,z] with g given per basis vector
MultiLinearOp cyclic_ternary(const std::string& name,
                             const MultiLinearOp& mul,
                             const MultiLinearOp& bracket,
                             const std::vector<Element>& g_of_basis) {
  const int d = mul.dim;
  const Field& f = mul.field;
  std::map<std::vector<int>, Element> table;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        Element v = product(mul, g_of_basis[static_cast<std::size_t>(i)],
                            op_basis_value(bracket, {j, k}));
        v = element_add(v,
                        product(mul, g_of_basis[static_cast<std::size_t>(j)],
                                op_basis_value(bracket, {k, i})));
        v = element_add(v,
                        product(mul, g_of_basis[static_cast<std::size_t>(k)],
                                op_basis_value(bracket, {i, j})));
        if (!is_zero_element(v)) table[{i, j, k}] = std::move(v);
      }
    }
  }
  return make_op(name, 3, Symmetry::Alternating, d, f, std::move(table));
}

std::vector<Element> basis_images(const LinearMap& m) {
  std::vector<Element> v;
  v.reserve(static_cast<std::size_t>(m.dim));
  for (int j = 0; j < m.dim; ++j)
    v.push_back(apply_map(m, basis_element(m.dim, m.field, j)));
  return v;
}

std::vector<Element> basis_vectors(int d, const Field& f) {
  std::vector<Element> v;
  v.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) v.push_back(basis_element(d, f, j));
  return v;
}

// strictly increasing index tuples of the given length
void increasing_tuples(int d, int len,
                       const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(len));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == len) {
      f(idx);
      return;
    }
    for (int v = start; v < d; ++v) {
      idx[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

MultiLinearOp commutator_bracket(const MultiLinearOp& circ) {
  require_bilinear("commutator_bracket", circ);
  const int d = circ.dim;
  std::map<std::vector<int>, Element> table;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Element v = element_sub(op_basis_value(circ, {i, j}),
                              op_basis_value(circ, {j, i}));
      if (!is_zero_element(v)) table[{i, j}] = std::move(v);
    }
  }
  return make_op("bracket", 2, Symmetry::Alternating, d, circ.field,
                 std::move(table));
}

MultiLinearOp gelfand_product(const MultiLinearOp& mul, const LinearMap& D) {
  require_symmetric_product("gelfand_product", mul);
  require_derivation("gelfand_product", mul, D);
  const int d = mul.dim;
  const auto e = basis_vectors(d, mul.field);
  std::map<std::vector<int>, Element> table;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Element v = product(mul, e[static_cast<std::size_t>(i)],
                          apply_map(D, e[static_cast<std::size_t>(j)]));
      if (!is_zero_element(v)) table[{i, j}] = std::move(v);
    }
  }
  return make_op("circ", 2, Symmetry::None, d, mul.field, std::move(table));
}

MultiLinearOp derivation_bracket(const MultiLinearOp& mul,
                                 const LinearMap& D) {
  require_symmetric_product("derivation_bracket", mul);
  require_derivation("derivation_bracket", mul, D);
  const int d = mul.dim;
  const auto e = basis_vectors(d, mul.field);
  std::map<std::vector<int>, Element> table;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Element v =
          element_sub(product(mul, e[static_cast<std::size_t>(i)],
                              apply_map(D, e[static_cast<std::size_t>(j)])),
                      product(mul, apply_map(D, e[static_cast<std::size_t>(i)]),
                              e[static_cast<std::size_t>(j)]));
      if (!is_zero_element(v)) table[{i, j}] = std::move(v);
    }
  }
  auto out = make_op("bracket", 2, Symmetry::Alternating, d, mul.field,
                     std::move(table));
  if (!(commutator_bracket(gelfand_product(mul, D)) == out))
    throw std::logic_error(
        "derivation_bracket disagrees with the commutator of the "
        "one-derivation product");
  return out;
}

MultiLinearOp two_derivation_bracket(const MultiLinearOp& mul,
                                     const LinearMap& d1,
                                     const LinearMap& d2) {
  require_symmetric_product("two_derivation_bracket", mul);
  require_derivation("two_derivation_bracket", mul, d1);
  require_derivation("two_derivation_bracket", mul, d2);
  if (!maps_commute(d1, d2)) {
    const LinearMap a = compose(d1, d2), b = compose(d2, d1);
    int col = 0;
    for (int j = 0; j < mul.dim; ++j) {
      bool differ = false;
      for (int i = 0; i < mul.dim; ++i)
        if (a.at(i, j) != b.at(i, j)) differ = true;
      if (differ) {
        col = j;
        break;
      }
    }
    throw PreconditionError("two_derivation_bracket: '" +
                            display(d1.name, "D1") + "' and '" +
                            display(d2.name, "D2") +
                            "' do not commute (images of basis vector " +
                            std::to_string(col) + " differ)");
  }
  const int d = mul.dim;
  const auto e = basis_vectors(d, mul.field);
  std::map<std::vector<int>, Element> table;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Element v = element_sub(
          product(mul, apply_map(d1, e[static_cast<std::size_t>(i)]),
                  apply_map(d2, e[static_cast<std::size_t>(j)])),
          product(mul, apply_map(d1, e[static_cast<std::size_t>(j)]),
                  apply_map(d2, e[static_cast<std::size_t>(i)])));
      if (!is_zero_element(v)) table[{i, j}] = std::move(v);
    }
  }
  return make_op("bracket", 2, Symmetry::Alternating, d, mul.field,
                 std::move(table));
}

MultiLinearOp rescaled_bracket(const MultiLinearOp& mul,
                               const MultiLinearOp& bracket,
                               const Element& h) {
  auto b = pair_bundle("rescaled_bracket", mul, bracket);
  if (static_cast<int>(h.size()) != mul.dim)
    throw std::invalid_argument("rescaled_bracket: h has wrong dimension");
  require_profile(b, "transposed-poisson", "rescaled_bracket");
  const int d = mul.dim;
  std::map<std::vector<int>, Element> table;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Element v = product(mul, h, op_basis_value(bracket, {i, j}));
      if (!is_zero_element(v)) table[{i, j}] = std::move(v);
    }
  }
  return make_op("bracket", 2, Symmetry::Alternating, d, mul.field,
                 std::move(table));
}

HomLieResult hom_lie_structure(const MultiLinearOp& mul,
                               const MultiLinearOp& bracket,
                               const Element& h) {
  auto b = pair_bundle("hom_lie_structure", mul, bracket);
  if (static_cast<int>(h.size()) != mul.dim)
    throw std::invalid_argument("hom_lie_structure: h has wrong dimension");
  require_profile(b, "transposed-poisson", "hom_lie_structure");
  const int d = mul.dim;
  LinearMap phi = zero_map(d, mul.field, "phi");
  for (int j = 0; j < d; ++j) {
    Element col = product(mul, h, basis_element(d, mul.field, j));
    for (int i = 0; i < d; ++i)
      phi.at(i, j) = col[static_cast<std::size_t>(i)];
  }
  b.add_map(phi);
  HomLieResult out{phi, check_identity(b, Axiom::HomJacobi),
                   check_identity(b, Axiom::Varphi2), std::nullopt};
  if (compose(phi, phi) == phi)
    out.multiplicativity = check_identity(
        b, Axiom::EndomorphismOf,
        Binding{{{"op", "bracket"}, {"map", "phi"}}});
  return out;
}

AlgebraBundle tensor_mixed(const AlgebraBundle& a, const std::string& op_a,
                           const AlgebraBundle& b, const std::string& op_b) {
  if (!(a.field == b.field))
    throw std::invalid_argument("tensor_mixed: factors use different fields");
  const MultiLinearOp& mul_a = a.op("mul");
  const MultiLinearOp& mul_b = b.op("mul");
  require_symmetric_product("tensor_mixed", mul_a);
  require_symmetric_product("tensor_mixed", mul_b);
  const MultiLinearOp& pa = a.op(op_a);
  const MultiLinearOp& pb = b.op(op_b);
  require_bilinear("tensor_mixed", pa);
  require_bilinear("tensor_mixed", pb);
  if (pa.symmetry != pb.symmetry ||
      pa.symmetry == Symmetry::Symmetric)
    throw std::invalid_argument(
        "tensor_mixed: paired ops must both be alternating or both plain");

  const int da = a.space.dim, db = b.space.dim;
  const int d = da * db;
  const Field& f = a.field;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      labels.push_back(a.space.labels[static_cast<std::size_t>(i)] + "⊗" +
                       b.space.labels[static_cast<std::size_t>(j)]);

  auto outer = [&](const Element& u, const Element& v) {
    Element w = zero_element(d, f);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j)
        w[static_cast<std::size_t>(i * db + j)] =
            u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    return w;
  };

  std::map<std::vector<int>, Element> mul_table;
  std::map<std::vector<int>, Element> op_table;
  for (int I = 0; I < d; ++I) {
    const int i1 = I / db, i2 = I % db;
    for (int J = 0; J < d; ++J) {
      const int j1 = J / db, j2 = J % db;
      if (J >= I) {
        Element v = outer(op_basis_value(mul_a, {i1, j1}),
                          op_basis_value(mul_b, {i2, j2}));
        if (!is_zero_element(v)) mul_table[{I, J}] = std::move(v);
      }
      const bool keep = pa.symmetry == Symmetry::Alternating ? J > I : true;
      if (keep) {
        Element v = element_add(outer(op_basis_value(pa, {i1, j1}),
                                      op_basis_value(mul_b, {i2, j2})),
                                outer(op_basis_value(mul_a, {i1, j1}),
                                      op_basis_value(pb, {i2, j2})));
        if (!is_zero_element(v)) op_table[{I, J}] = std::move(v);
      }
    }
  }

  AlgebraBundle out;
  out.space = make_space(std::move(labels));
  out.field = f;
  out.add_op(
      make_op("mul", 2, Symmetry::Symmetric, d, f, std::move(mul_table)));
  out.add_op(make_op(pa.name, 2, pa.symmetry, d, f, std::move(op_table)));
  return out;
}

MultiLinearOp three_lie_from_derivation(const MultiLinearOp& mul,
                                        const MultiLinearOp& bracket,
                                        const LinearMap& D) {
  auto b = pair_bundle("three_lie_from_derivation", mul, bracket);
  auto tpa_reports = check_profile(b, "transposed-poisson");
  if (!profile_passes(tpa_reports)) {
    auto poisson_reports = check_profile(b, "poisson");
    auto strong = check_identity(b, Axiom::StrongPoisson);
    if (!(profile_passes(poisson_reports) && strong.holds)) {
      std::vector<CheckReport> bad;
      for (auto& r : tpa_reports)
        if (!r.holds) bad.push_back(r);
      for (auto& r : poisson_reports)
        if (!r.holds) bad.push_back(r);
      if (!strong.holds) bad.push_back(strong);
      throw PreconditionError(
          "three_lie_from_derivation: input is neither transposed Poisson "
          "nor strong Poisson",
          std::move(bad));
    }
  }
  require_derivation("three_lie_from_derivation", mul, D);
  require_derivation("three_lie_from_derivation", bracket, D);
  return cyclic_ternary("tri", mul, bracket, basis_images(D));
}

InvolutionThreeLie three_lie_from_involution(const MultiLinearOp& mul,
                                             const MultiLinearOp& bracket,
                                             const LinearMap& f) {
  auto b = pair_bundle("three_lie_from_involution", mul, bracket);
  require_same_space("three_lie_from_involution", mul.dim, mul.field, f.dim,
                     f.field, "map '" + display(f.name, "f") + "'");
  require_profile(b, "transposed-poisson", "three_lie_from_involution");

  const int d = mul.dim;
  if (!(compose(f, f) == identity_map(d, mul.field))) {
    int col = 0;
    const LinearMap ff = compose(f, f);
    const LinearMap id = identity_map(d, mul.field);
    for (int j = 0; j < d; ++j) {
      bool differ = false;
      for (int i = 0; i < d; ++i)
        if (ff.at(i, j) != id.at(i, j)) differ = true;
      if (differ) {
        col = j;
        break;
      }
    }
    throw PreconditionError("three_lie_from_involution: '" +
                            display(f.name, "f") +
                            "' squared is not the identity (basis vector " +
                            std::to_string(col) + ")");
  }

  b.add_map(renamed(f, "f"));
  auto endo = check_identity(b, Axiom::EndomorphismOf,
                             Binding{{{"op", "mul"}, {"map", "f"}}});
  if (!endo.holds)
    throw PreconditionError(
        "three_lie_from_involution: '" + display(f.name, "f") +
            "' is not an endomorphism of the product",
        {endo});
  auto anti = check_identity(b, Axiom::Anti);
  if (!anti.holds)
    throw PreconditionError(
        "three_lie_from_involution: '" + display(f.name, "f") +
            "' does not reverse the bracket" +
            (anti.witness ? " (part '" + anti.witness->part + "')" : ""),
        {anti});

  InvolutionThreeLie out{
      cyclic_ternary("tri", mul, bracket, basis_images(b.map("f"))),
      check_identity(b, Axiom::Const3Extra), std::nullopt};
  if (out.const3_extra.holds) {
    AlgebraBundle with_tri = b;
    with_tri.add_op(out.op);
    out.transposed_3lie = check_identity(with_tri, Axiom::Transposed3Lie);
  }
  return out;
}

MultiLinearOp three_lie_from_poisson(const MultiLinearOp& mul,
                                     const MultiLinearOp& bracket) {
  auto b = pair_bundle("three_lie_from_poisson", mul, bracket);
  require_profile(b, "poisson", "three_lie_from_poisson");
  return cyclic_ternary("tri", mul, bracket,
                        basis_vectors(mul.dim, mul.field));
}

MultiLinearOp nlie_ladder_step(const MultiLinearOp& mul,
                               const MultiLinearOp& mu_n, const LinearMap& D,
                               const LadderLimits& limits) {
  require_symmetric_product("nlie_ladder_step", mul);
  require_same_space("nlie_ladder_step", mul.dim, mul.field, mu_n.dim,
                     mu_n.field,
                     "op '" + display(mu_n.name, "mu_n") + "'");
  const int n = mu_n.arity;
  const int m = n + 1;
  if (m > limits.max_arity)
    throw std::invalid_argument(
        "nlie_ladder_step: arity " + std::to_string(m) + " exceeds the cap " +
        std::to_string(limits.max_arity));
  if (mul.dim > limits.max_dim)
    throw std::invalid_argument("nlie_ladder_step: dimension " +
                                std::to_string(mul.dim) +
                                " exceeds the cap " +
                                std::to_string(limits.max_dim));

  AlgebraBundle b;
  b.space = make_space(generic_labels(mul.dim));
  b.field = mul.field;
  b.add_op(renamed(mul, "mul"));
  b.add_op(renamed(mu_n, "tri"));
  require_profile(b, "tpa-nlie", "nlie_ladder_step");
  require_derivation("nlie_ladder_step", mul, D);
  require_derivation("nlie_ladder_step", mu_n, D);

  const int d = mul.dim;
  const Field& f = mul.field;
  const auto dx = basis_images(D);
  std::map<std::vector<int>, Element> table;
  increasing_tuples(d, m, [&](const std::vector<int>& idx) {
    Element v = zero_element(d, f);
    for (int t = 0; t < m; ++t) {
      std::vector<int> rest;
      rest.reserve(static_cast<std::size_t>(n));
      for (int u = 0; u < m; ++u)
        if (u != t) rest.push_back(idx[static_cast<std::size_t>(u)]);
      Element term =
          product(mul, dx[static_cast<std::size_t>(
                             idx[static_cast<std::size_t>(t)])],
                  op_basis_value(mu_n, rest));
      if (t % 2 == 0)
        v = element_add(std::move(v), term);
      else
        v = element_sub(std::move(v), term);
    }
    if (!is_zero_element(v)) table[idx] = std::move(v);
  });
  return make_op("mu" + std::to_string(m), m, Symmetry::Alternating, d, f,
                 std::move(table));
}

MultiLinearOp wedge_bracket(const std::vector<LinearMap>& maps,
                            const MultiLinearOp& mul) {
  require_symmetric_product("wedge_bracket", mul);
  if (maps.empty())
    throw std::invalid_argument("wedge_bracket: needs at least one map");
  const int d = mul.dim;
  const Field& f = mul.field;
  const LinearMap id = identity_map(d, f);
  for (const auto& m : maps) {
    require_same_space("wedge_bracket", d, f, m.dim, m.field,
                       "map '" + display(m.name, "map") + "'");
    if (!(m == id)) require_derivation("wedge_bracket", mul, m);
  }
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j)
      if (!maps_commute(maps[i], maps[j]))
        throw PreconditionError(
            "wedge_bracket: '" + display(maps[i].name, "map") + "' and '" +
            display(maps[j].name, "map") + "' do not commute");

  const int n = static_cast<int>(maps.size());
  std::vector<std::vector<Element>> images;
  images.reserve(maps.size());
  for (const auto& m : maps) images.push_back(basis_images(m));

  std::map<std::vector<int>, Element> table;
  increasing_tuples(d, n, [&](const std::vector<int>& idx) {
    Element v = zero_element(d, f);
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      // row k of the determinant applies maps[k] to the perm(k)-th argument
      auto entry = [&](std::size_t k) -> const Element& {
        return images[k][static_cast<std::size_t>(idx[perm[k]])];
      };
      Element acc = entry(0);
      for (std::size_t k = 1; k < perm.size(); ++k)
        acc = product(mul, acc, entry(k));
      int inv = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inv;
      if (inv % 2 == 0)
        v = element_add(std::move(v), acc);
      else
        v = element_sub(std::move(v), acc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!is_zero_element(v)) table[idx] = std::move(v);
  });
  return make_op("wedge", n, Symmetry::Alternating, d, f, std::move(table));
}

}  // namespace tpa
