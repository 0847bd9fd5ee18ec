#include "tpa/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "tpa/axioms.hpp"
#include "tpa/construct.hpp"
#include "tpa/solve.hpp"

namespace tpa {

namespace {

Element el(const Field& f, std::vector<std::int64_t> coords) {
  Element v;
  v.reserve(coords.size());
  for (std::int64_t c : coords) v.push_back(Scalar::from_int(c, f));
  return v;
}

AlgebraBundle pair_2d(const Field& f,
                      std::map<std::vector<int>, Element> mul_table,
                      std::map<std::vector<int>, Element> bracket_table) {
  AlgebraBundle b;
  b.space = make_space({"e1", "e2"});
  b.field = f;
  b.add_op(make_op("mul", 2, Symmetry::Symmetric, 2, f, std::move(mul_table)));
  b.add_op(make_op("bracket", 2, Symmetry::Alternating, 2, f,
                   std::move(bracket_table)));
  return b;
}

std::map<std::vector<int>, Element> bracket_e2(const Field& f) {
  return {{{0, 1}, el(f, {0, 1})}};
}

// Every entry re-proves its claims before it leaves the builder.
CatalogEntry finish(CatalogEntry e) {
  for (const std::string& profile : e.claimed_profiles) {
    auto reports = check_profile(e.bundle, profile);
    for (const CheckReport& r : reports) {
      if (r.holds) continue;
      throw std::logic_error("catalog: entry '" + e.id +
                             "' fails claimed profile '" + profile +
                             "' at axiom " + axiom_name(r.axiom));
    }
  }
  return e;
}

LinearMap single_entry_map(int dim, const Field& f, int i, int j,
                           const Scalar& v, std::string name) {
  LinearMap m = zero_map(dim, f, std::move(name));
  m.at(i, j) = v;
  return m;
}

}  // namespace

std::vector<CatalogEntry> catalog_2d_transposed(const Field& f) {
  std::vector<CatalogEntry> out;
  const Scalar one = Scalar::one(f);
  const std::vector<std::string> both = {"transposed-poisson", "poisson"};

  // Zero bracket: any commutative associative product is compatible.
  out.push_back(finish({"2d-abelian-a", pair_2d(f, {}, {}), both, {}, ""}));
  out.push_back(finish({"2d-abelian-b",
                        pair_2d(f,
                                {{{0, 0}, el(f, {1, 0})},
                                 {{1, 1}, el(f, {0, 1})}},
                                {}),
                        both,
                        {},
                        ""}));
  out.push_back(finish({"2d-abelian-c",
                        pair_2d(f,
                                {{{0, 0}, el(f, {1, 0})},
                                 {{0, 1}, el(f, {0, 1})}},
                                {}),
                        both,
                        {},
                        ""}));
  out.push_back(finish(
      {"2d-abelian-d", pair_2d(f, {{{0, 0}, el(f, {1, 0})}}, {}), both, {},
       ""}));
  out.push_back(finish(
      {"2d-abelian-e", pair_2d(f, {{{0, 0}, el(f, {0, 1})}}, {}), both, {},
       ""}));

  // Bracket [e1,e2] = e2.
  out.push_back(finish(
      {"2d-nonabelian-a", pair_2d(f, {}, bracket_e2(f)), both, {}, ""}));
  out.push_back(finish({"2d-nonabelian-b",
                        pair_2d(f, {{{0, 0}, el(f, {0, 1})}}, bracket_e2(f)),
                        {"transposed-poisson"},
                        {},
                        ""}));
  out.push_back(finish(
      {"2d-nonabelian-c",
       pair_2d(f,
               {{{0, 1}, el(f, {1, 0})}, {{1, 1}, el(f, {0, 1})}},
               bracket_e2(f)),
       {},
       {},
       "commutative, associative, Jacobi; the transposed Leibniz rule fails "
       "at (e1, e2, e1) whenever 2 != 0 in the base field: 2 e1*[e1,e2] = "
       "2 e1 while [e1*e1, e2] + [e1, e1*e2] = 0"}));
  out.push_back(catalog_2d_nonabelian_d(one));
  return out;
}

CatalogEntry catalog_2d_nonabelian_d(const Scalar& lambda) {
  if (lambda.is_zero())
    throw std::invalid_argument(
        "catalog_2d_nonabelian_d: lambda must be nonzero (lambda = 0 is the "
        "zero product, entry 2d-nonabelian-a)");
  const Field f = lambda.field();
  Element le1 = {lambda, Scalar::zero(f)};
  Element le2 = {Scalar::zero(f), lambda};
  CatalogEntry e{"2d-nonabelian-d",
                 pair_2d(f, {{{0, 0}, le1}, {{0, 1}, le2}}, bracket_e2(f)),
                 {"transposed-poisson"},
                 {{"lambda", lambda}},
                 ""};
  return finish(std::move(e));
}

std::vector<CatalogEntry> catalog_2d_derivation_induced(const Field& f) {
  std::vector<CatalogEntry> out;
  const Scalar one = Scalar::one(f);
  const std::vector<std::string> both = {"transposed-poisson", "poisson"};
  const std::vector<int> expected_der_dim = {4, 0, 1, 1, 2};

  out.push_back(finish({"der-1", pair_2d(f, {}, {}), both, {}, ""}));
  out.push_back(finish({"der-2",
                        pair_2d(f,
                                {{{0, 0}, el(f, {1, 0})},
                                 {{1, 1}, el(f, {0, 1})}},
                                {}),
                        both,
                        {},
                        ""}));
  out.push_back(finish(
      {"der-3", pair_2d(f, {{{0, 0}, el(f, {1, 0})}}, {}), both, {}, ""}));
  out.push_back(catalog_derivation_entry_4(one));
  out.push_back(catalog_derivation_entry_5(one));

  for (std::size_t k = 0; k < out.size(); ++k) {
    SolutionSpace der = derivation_space(out[k].bundle, {"mul"});
    if (der.dimension() != expected_der_dim[k])
      throw std::logic_error("catalog: entry '" + out[k].id +
                             "' has derivation space of dimension " +
                             std::to_string(der.dimension()) + ", expected " +
                             std::to_string(expected_der_dim[k]));
  }

  // Stated generators of each derivation space.
  const AlgebraBundle& b3 = out[2].bundle;
  SolutionSpace der3 = derivation_space(b3, {"mul"});
  if (!der3.contains_map(single_entry_map(2, f, 1, 1, one, "D")))
    throw std::logic_error("catalog: der-3 generator diag(0,1) missing");
  SolutionSpace der4 = derivation_space(out[3].bundle, {"mul"});
  if (!der4.contains_map(single_entry_map(2, f, 1, 1, one, "D")))
    throw std::logic_error("catalog: der-4 generator diag(0,1) missing");
  SolutionSpace der5 = derivation_space(out[4].bundle, {"mul"});
  LinearMap d5a = zero_map(2, f, "D_a");
  d5a.at(0, 0) = one;
  d5a.at(1, 1) = Scalar::from_int(2, f);
  LinearMap d5b = single_entry_map(2, f, 1, 0, one, "D_b");
  if (!der5.contains_map(d5a) || !der5.contains_map(d5b))
    throw std::logic_error("catalog: der-5 generators missing");

  // The brackets the generators induce: zero for der-1/3/5, a e2 for der-4.
  if (!op_is_zero(derivation_bracket(out[0].bundle.op("mul"),
                                     identity_map(2, f))) ||
      !op_is_zero(derivation_bracket(b3.op("mul"),
                                     single_entry_map(2, f, 1, 1, one, "D"))) ||
      !op_is_zero(derivation_bracket(out[4].bundle.op("mul"), d5a)) ||
      !op_is_zero(derivation_bracket(out[4].bundle.op("mul"), d5b)))
    throw std::logic_error("catalog: expected an induced zero bracket");
  return out;
}

CatalogEntry catalog_derivation_entry_4(const Scalar& a) {
  const Field f = a.field();
  CatalogEntry e{"der-4",
                 pair_2d(f,
                         {{{0, 0}, el(f, {1, 0})}, {{0, 1}, el(f, {0, 1})}},
                         {{{0, 1}, Element{Scalar::zero(f), a}}}),
                 {"transposed-poisson"},
                 {{"a", a}},
                 ""};
  LinearMap d = single_entry_map(2, f, 1, 1, a, "D");
  MultiLinearOp induced = derivation_bracket(e.bundle.op("mul"), d);
  if (!(induced == e.bundle.op("bracket")))
    throw std::logic_error(
        "catalog: der-4 bracket does not match x*D(y) - D(x)*y for "
        "D = diag(0, a)");
  return finish(std::move(e));
}

CatalogEntry catalog_derivation_entry_5(const Scalar& b) {
  const Field f = b.field();
  CatalogEntry e{
      "der-5",
      pair_2d(f, {{{0, 0}, el(f, {0, 1})}},
              {{{0, 1}, Element{Scalar::zero(f), b}}}),
      {"transposed-poisson"},
      {{"b", b}},
      "every derivation D of this product satisfies x*D(y) - D(x)*y = 0 "
      "(both e1*e2 and e2*e2 vanish), so the bracket [e1,e2] = b e2 is "
      "carried as stated rather than derived"};
  return finish(std::move(e));
}

AlgebraBundle truncated_polynomial_algebra(const std::vector<std::string>& vars,
                                           const std::vector<int>& caps,
                                           const Field& f) {
  if (vars.empty())
    throw std::invalid_argument(
        "truncated_polynomial_algebra: need at least one variable");
  if (vars.size() != caps.size())
    throw std::invalid_argument(
        "truncated_polynomial_algebra: one cap per variable");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty())
      throw std::invalid_argument(
          "truncated_polynomial_algebra: empty variable name");
    if (caps[i] < 2)
      throw std::invalid_argument("truncated_polynomial_algebra: cap for '" +
                                  vars[i] + "' must be >= 2");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[j] == vars[i])
        throw std::invalid_argument(
            "truncated_polynomial_algebra: duplicate variable '" + vars[i] +
            "'");
  }
  const int n = static_cast<int>(vars.size());
  long long dim_ll = 1;
  for (int c : caps) {
    dim_ll *= c;
    if (dim_ll > 100000)
      throw std::invalid_argument(
          "truncated_polynomial_algebra: dimension exceeds 100000");
  }
  const int d = static_cast<int>(dim_ll);

  // Exponent vectors below the caps, by total degree, ties broken by
  // descending exponent vector (so x before y, x^2 before x*y).
  std::vector<std::vector<int>> expo;
  expo.reserve(static_cast<std::size_t>(d));
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  for (;;) {
    expo.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] + 1 ==
                         caps[static_cast<std::size_t>(i)]) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  auto degree = [](const std::vector<int>& e) {
    int s = 0;
    for (int k : e) s += k;
    return s;
  };
  std::sort(expo.begin(), expo.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              int da = degree(a), db = degree(b);
              if (da != db) return da < db;
              return a > b;
            });
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  labels.reserve(expo.size());
  for (int k = 0; k < d; ++k) {
    index[expo[static_cast<std::size_t>(k)]] = k;
    const std::vector<int>& e = expo[static_cast<std::size_t>(k)];
    std::string lab;
    for (int i = 0; i < n; ++i) {
      int p = e[static_cast<std::size_t>(i)];
      if (p == 0) continue;
      if (!lab.empty()) lab += "*";
      lab += vars[static_cast<std::size_t>(i)];
      if (p > 1) lab += "^" + std::to_string(p);
    }
    labels.push_back(lab.empty() ? "1" : lab);
  }

  AlgebraBundle b;
  b.space = make_space(labels);
  b.field = f;

  std::map<std::vector<int>, Element> table;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      std::vector<int> sum(static_cast<std::size_t>(n));
      bool dead = false;
      for (int k = 0; k < n; ++k) {
        sum[static_cast<std::size_t>(k)] =
            expo[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
            expo[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (sum[static_cast<std::size_t>(k)] >= caps[static_cast<std::size_t>(k)])
          dead = true;
      }
      if (dead) continue;
      table[{i, j}] = basis_element(d, f, index.at(sum));
    }
  }
  b.add_op(make_op("mul", 2, Symmetry::Symmetric, d, f, std::move(table)));

  // E_i = x_i d/dx_i is diagonal on monomials and descends to the quotient.
  for (int v = 0; v < n; ++v) {
    LinearMap m = zero_map(d, f, "E_" + vars[static_cast<std::size_t>(v)]);
    for (int k = 0; k < d; ++k)
      m.at(k, k) = Scalar::from_int(
          expo[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)], f);
    b.add_map(std::move(m));
  }
  return b;
}

CatalogEntry prelie_poisson_2d_example(const Field& f) {
  return prelie_poisson_2d_example_at(Scalar::one(f));
}

CatalogEntry prelie_poisson_2d_example_at(const Scalar& a) {
  const Field f = a.field();
  AlgebraBundle b;
  b.space = make_space({"e1", "e2"});
  b.field = f;
  b.add_op(make_op("mul", 2, Symmetry::Symmetric, 2, f,
                   {{{0, 0}, Element{Scalar::zero(f), a}}}));
  b.add_op(make_op("circ", 2, Symmetry::None, 2, f,
                   {{{0, 0}, el(f, {1, 0})}, {{0, 1}, el(f, {0, 1})}}));

  CatalogEntry e{"prelie-2d", std::move(b), {}, {{"a", a}}, ""};
  if (a.is_zero()) {
    e.claimed_profiles = {"prelie-poisson", "prelie-com"};
  } else {
    e.note =
        "circ is associative (hence pre-Lie) and np2 holds, but np1 fails at "
        "(e1, e1, e1): (e1*e1) o e1 = 0 while e1*(e1 o e1) = a e2; no "
        "nonzero commutative product satisfies np1 against this circ";
  }

  // novikov_right must fail: (e1 o e1) o e2 = e2 while (e1 o e2) o e1 = 0.
  CheckReport nr = check_identity(e.bundle, Axiom::NovikovRight);
  if (nr.holds)
    throw std::logic_error(
        "catalog: prelie-2d unexpectedly satisfies novikov_right");
  return finish(std::move(e));
}

std::vector<int> invariant_fingerprint(const AlgebraBundle& bundle,
                                       const std::string& mul_name,
                                       const std::string& bracket_name) {
  const MultiLinearOp& mul = bundle.op(mul_name);
  const MultiLinearOp& br = bundle.op(bracket_name);
  if (mul.arity != 2 || mul.symmetry != Symmetry::Symmetric)
    throw std::invalid_argument("invariant_fingerprint: '" + mul_name +
                                "' must be a symmetric bilinear product");
  if (br.arity != 2 || br.symmetry != Symmetry::Alternating)
    throw std::invalid_argument("invariant_fingerprint: '" + bracket_name +
                                "' must be an alternating bilinear bracket");
  const int d = bundle.space.dim;
  const Field& f = bundle.field;

  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) rows.push_back(op_basis_value(mul, {i, j}));
  const int mul_image = rref_in_place(rows, f);

  rows.clear();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) rows.push_back(op_basis_value(br, {i, j}));
  const int br_image = rows.empty() ? 0 : rref_in_place(rows, f);

  // x is in the annihilator (resp. center) iff x * e_j = 0 for all j; the
  // unknowns are the coordinates of x.
  auto kernel_dim = [&](const MultiLinearOp& op) {
    std::vector<std::vector<Scalar>> cons;
    for (int j = 0; j < d; ++j) {
      std::vector<Element> cols;
      cols.reserve(static_cast<std::size_t>(d));
      for (int bidx = 0; bidx < d; ++bidx)
        cols.push_back(op_basis_value(op, {bidx, j}));
      for (int r = 0; r < d; ++r) {
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(d));
        for (int bidx = 0; bidx < d; ++bidx)
          row.push_back(cols[static_cast<std::size_t>(bidx)]
                            [static_cast<std::size_t>(r)]);
        cons.push_back(std::move(row));
      }
    }
    return d - rref_in_place(cons, f);
  };
  const int annihilator = kernel_dim(mul);
  const int center = kernel_dim(br);

  const int joint_der =
      joint_derivation_space(bundle, {mul_name, bracket_name}).dimension();

  // Trace form of left multiplication: T[i][j] = tr(L_{e_i} L_{e_j}).
  std::vector<std::vector<Element>> prod(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    prod[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c)
      prod[static_cast<std::size_t>(i)].push_back(op_basis_value(mul, {i, c}));
  }
  std::vector<std::vector<Scalar>> trace(
      static_cast<std::size_t>(d),
      std::vector<Scalar>(static_cast<std::size_t>(d), Scalar::zero(f)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Scalar acc = Scalar::zero(f);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          acc = acc + prod[static_cast<std::size_t>(i)]
                          [static_cast<std::size_t>(c)]
                          [static_cast<std::size_t>(r)] *
                          prod[static_cast<std::size_t>(j)]
                              [static_cast<std::size_t>(r)]
                              [static_cast<std::size_t>(c)];
      trace[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
    }
  const int trace_rank = rref_in_place(trace, f);

  return {mul_image, br_image, annihilator, center, joint_der, trace_rank};
}

}  // namespace tpa
