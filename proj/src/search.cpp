#include "tpa/search.hpp"

#include <stdexcept>

#include "tpa/catalog.hpp"
#include "tpa/solve.hpp"

namespace tpa {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("SplitMix64::bounded: n must be > 0");
  return next() % n;
}

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(t[i]);
  }
  return s + ")";
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

// Minimal bundle holding exactly the named objects a re-check needs.
AlgebraBundle probe_bundle(const BasisSpace& space, const Field& f,
                           std::vector<MultiLinearOp> ops,
                           std::vector<LinearMap> maps) {
  AlgebraBundle b;
  b.space = space;
  b.field = f;
  for (auto& op : ops) b.add_op(std::move(op));
  for (auto& m : maps) b.add_map(std::move(m));
  return b;
}

void require_gf(const Field& f, const char* ctx) {
  if (f.is_rational())
    throw std::invalid_argument(std::string(ctx) +
                                ": enumeration needs a finite field");
}

}  // namespace

SearchReport find_involutive_antimorphisms(const AlgebraBundle& bundle,
                                           const EnumBudget& budget) {
  require_gf(bundle.field, "find_involutive_antimorphisms");
  const MultiLinearOp& mul = bundle.op("mul");
  const MultiLinearOp& br = bundle.op("bracket");
  if (mul.symmetry != Symmetry::Symmetric || mul.arity != 2)
    throw std::invalid_argument(
        "find_involutive_antimorphisms: 'mul' must be a symmetric bilinear "
        "product");
  if (br.symmetry != Symmetry::Alternating || br.arity != 2)
    throw std::invalid_argument(
        "find_involutive_antimorphisms: 'bracket' must be an alternating "
        "bilinear bracket");
  const int d = bundle.space.dim;
  if (d > budget.max_dim)
    throw std::invalid_argument(
        "find_involutive_antimorphisms: dimension " + std::to_string(d) +
        " exceeds the enumeration cap " + std::to_string(budget.max_dim));
  const Field& f = bundle.field;
  const std::int64_t p = f.p;
  const int cells = d * d;

  SearchReport report;
  report.target = "involutive-antimorphisms";
  report.verdict = "no-candidates";

  const LinearMap id = identity_map(d, f);
  std::vector<Element> basis;
  for (int i = 0; i < d; ++i) basis.push_back(basis_element(d, f, i));

  // Row-major lexicographic odometer over residue entries; the last cell
  // moves fastest.
  std::vector<std::int64_t> r(static_cast<std::size_t>(cells), 0);
  bool exhausted = false;
  while (!exhausted) {
    if (report.candidates >= budget.max_candidates) {
      report.partial_coverage = true;
      break;
    }
    LinearMap cand = zero_map(d, f);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        cand.at(i, j) =
            Scalar::from_residue(r[static_cast<std::size_t>(i * d + j)], f);
    const long long index = report.candidates++;

    bool ok = compose(cand, cand) == id;
    if (ok) {
      std::vector<Element> img;
      img.reserve(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        img.push_back(apply_map(cand, basis[static_cast<std::size_t>(i)]));
      for (int i = 0; ok && i < d; ++i)
        for (int j = i; ok && j < d; ++j)
          ok = apply_map(cand, op_basis_value(mul, {i, j})) ==
               evaluate_op(mul, {img[static_cast<std::size_t>(i)],
                                 img[static_cast<std::size_t>(j)]});
      for (int i = 0; ok && i < d; ++i)
        for (int j = i + 1; ok && j < d; ++j)
          ok = apply_map(cand, op_basis_value(br, {i, j})) ==
               element_neg(evaluate_op(br, {img[static_cast<std::size_t>(i)],
                                            img[static_cast<std::size_t>(j)]}));
      if (ok) report.hits.push_back({index, renamed(cand, "f")});
    }

    int cell = cells - 1;
    while (cell >= 0 && r[static_cast<std::size_t>(cell)] + 1 == p) {
      r[static_cast<std::size_t>(cell)] = 0;
      --cell;
    }
    if (cell < 0)
      exhausted = true;
    else
      ++r[static_cast<std::size_t>(cell)];
  }

  // Replay every hit through the axiom engine.
  for (const SearchHit& h : report.hits) {
    AlgebraBundle probe = probe_bundle(bundle.space, f, {mul, br}, {h.map});
    CheckReport anti = check_identity(probe, Axiom::Anti);
    CheckReport endo = check_identity(probe, Axiom::EndomorphismOf,
                                      Binding::parse({"map=f"}));
    if (!anti.holds || !endo.holds)
      throw std::logic_error(
          "find_involutive_antimorphisms: hit failed re-verification");
  }
  if (!report.hits.empty()) report.verdict = "all-pass";
  return report;
}

std::vector<AlgebraBundle> sample_tpa_instances(const GeneratorSpec& spec,
                                                std::uint64_t seed) {
  std::vector<AlgebraBundle> out;

  if (spec.kind == "catalog") {
    for (CatalogEntry& e : catalog_2d_transposed(spec.field)) {
      if (!profile_passes(check_profile(e.bundle, "transposed-poisson")))
        continue;
      e.bundle.metadata["generator"] = "catalog";
      e.bundle.metadata["instance"] = e.id;
      out.push_back(std::move(e.bundle));
    }
    return out;
  }

  if (spec.kind == "truncated-poly") {
    static const std::vector<std::string> short_names = {"x", "y", "z"};
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < spec.caps.size(); ++i)
      vars.push_back(spec.caps.size() <= short_names.size()
                         ? short_names[i]
                         : "x" + std::to_string(i + 1));
    AlgebraBundle base = truncated_polynomial_algebra(vars, spec.caps,
                                                      spec.field);
    const int d = base.space.dim;
    SplitMix64 rng(seed);
    for (int k = 0; k < spec.count; ++k) {
      LinearMap dmap = zero_map(d, base.field, "D");
      std::string drawn = "(";
      for (std::size_t v = 0; v < vars.size(); ++v) {
        std::int64_t c = static_cast<std::int64_t>(rng.bounded(5));
        if (v) drawn += ", ";
        drawn += std::to_string(c);
        const LinearMap& ev = base.map("E_" + vars[v]);
        const Scalar cs = Scalar::from_int(c, base.field);
        for (int i = 0; i < d; ++i)
          dmap.at(i, i) = dmap.at(i, i) + cs * ev.at(i, i);
      }
      drawn += ")";
      MultiLinearOp bracket =
          renamed(derivation_bracket(base.op("mul"), dmap), "bracket");
      AlgebraBundle inst =
          probe_bundle(base.space, base.field, {base.op("mul"), bracket},
                       {dmap});
      inst.metadata["generator"] = "truncated-poly";
      inst.metadata["euler-coefficients"] = drawn;
      if (profile_passes(check_profile(inst, "transposed-poisson")))
        out.push_back(std::move(inst));
    }
    return out;
  }

  if (spec.kind == "solver-family") {
    if (spec.pool.empty())
      throw std::invalid_argument(
          "sample_tpa_instances: solver-family needs a coordinate pool");
    SolutionSpace space = compatible_symmetric_products(
        spec.bracket, CompatRule::TransposedLeibniz);
    SplitMix64 rng(seed);
    for (int k = 0; k < spec.count; ++k) {
      std::vector<Scalar> coords;
      std::string drawn = "(";
      for (int j = 0; j < space.dimension(); ++j) {
        const Scalar& c =
            spec.pool[rng.bounded(static_cast<std::uint64_t>(spec.pool.size()))];
        coords.push_back(c);
        if (j) drawn += ", ";
        drawn += c.str();
      }
      drawn += ")";
      MultiLinearOp mul = space.combine_op(coords, "mul");
      std::vector<std::string> labels;
      for (int i = 1; i <= spec.bracket.dim; ++i)
        labels.push_back("e" + std::to_string(i));
      AlgebraBundle inst =
          probe_bundle(make_space(labels), spec.bracket.field,
                       {mul, renamed(spec.bracket, "bracket")}, {});
      inst.metadata["generator"] = "solver-family";
      inst.metadata["coordinates"] = drawn;
      if (profile_passes(check_profile(inst, "transposed-poisson")))
        out.push_back(std::move(inst));
    }
    return out;
  }

  throw std::invalid_argument("sample_tpa_instances: unknown generator kind '" +
                              spec.kind + "'");
}

SearchReport test_conjecture_ladder(const AlgebraBundle& instance, int levels,
                                    const std::string& mul_name,
                                    const std::string& nary_name,
                                    const std::string& map_name,
                                    const LadderLimits& limits) {
  if (levels < 1)
    throw std::invalid_argument("test_conjecture_ladder: levels must be >= 1");
  const MultiLinearOp mul = renamed(instance.op(mul_name), "mul");
  MultiLinearOp cur = instance.op(nary_name);
  const LinearMap dmap = renamed(instance.map(map_name), "D");

  {
    AlgebraBundle start = probe_bundle(instance.space, instance.field,
                                       {mul, renamed(cur, "tri")}, {});
    auto reports = check_profile(start, "tpa-nlie",
                                 Binding::parse({"tri=tri"}));
    if (!profile_passes(reports)) {
      std::vector<CheckReport> failing;
      for (const CheckReport& r : reports)
        if (!r.holds) failing.push_back(r);
      throw PreconditionError(
          "test_conjecture_ladder: instance does not satisfy the n-ary "
          "transposed profile",
          std::move(failing));
    }
  }

  SearchReport report;
  report.target = "conjecture-ladder";
  report.verdict = "all-pass";

  for (int level = 1; level <= levels; ++level) {
    MultiLinearOp next = nlie_ladder_step(mul, cur, dmap, limits);
    AlgebraBundle probe = probe_bundle(instance.space, instance.field,
                                       {mul, next}, {dmap});
    const Binding on_next = Binding::parse({"tri=" + next.name});
    const std::string where =
        "level " + std::to_string(level) + " (arity " +
        std::to_string(next.arity) + ")";
    report.candidates = level;

    for (Axiom ax : {Axiom::FundamentalIdentity, Axiom::TransposedNLie,
                     Axiom::DerivationOf}) {
      const Binding& bind =
          ax == Axiom::DerivationOf
              ? Binding::parse({"op=" + next.name, "map=D"})
              : on_next;
      CheckReport r = check_identity(probe, ax, bind);
      if (r.holds) continue;
      report.verdict = "counterexample-found";
      report.counterexamples.push_back({where, ax, *r.witness});

      // The witness must reproduce the recorded sides when replayed.
      auto sides = evaluate_identity_at(probe, ax, bind, r.witness->tuple,
                                        r.witness->part);
      if (sides.first != r.witness->left || sides.second != r.witness->right ||
          sides.first == sides.second)
        throw std::logic_error(
            "test_conjecture_ladder: counterexample failed re-verification");
      return report;
    }
    cur = std::move(next);
  }
  return report;
}

}  // namespace tpa
