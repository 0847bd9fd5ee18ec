#include <stdexcept>
#include <vector>

#include "builders.hpp"
#include "doctest.h"
#include "tpa/axioms.hpp"

using namespace tpa;

namespace {

const Field Q = Field::rationals();

Binding bind(std::initializer_list<std::pair<std::string, std::string>> kv) {
  Binding b;
  for (const auto& [k, v] : kv) b.roles[k] = v;
  return b;
}

bool holds(const AlgebraBundle& b, Axiom a, const Binding& bi = {}) {
  return check_identity(b, a, bi).holds;
}

}  // namespace

TEST_CASE("axiom names round-trip") {
  CHECK(all_axioms().size() == 31);
  for (Axiom a : all_axioms()) CHECK(axiom_from_name(axiom_name(a)) == a);
  CHECK(axiom_name(Axiom::TransposedLeibniz) == "transposed_leibniz");
  CHECK(axiom_name(Axiom::FundamentalIdentity) == "fundamental_identity");
  CHECK_THROWS_AS(axiom_from_name("no_such_axiom"), std::invalid_argument);
}

TEST_CASE("binding defaults and parsing") {
  Binding b;
  CHECK(b.resolve("mul") == "mul");
  CHECK(b.resolve("bracket") == "bracket");
  CHECK(b.resolve("map") == "D");
  CHECK(b.resolve("op") == "mul");
  b.roles["map"] = "E";
  CHECK(b.resolve("map") == "E");

  Binding p = Binding::parse({"bracket=br2", "map=D1"});
  CHECK(p.resolve("bracket") == "br2");
  CHECK(p.resolve("map") == "D1");
  CHECK_THROWS_AS(Binding::parse({"nonsense"}), std::invalid_argument);
  CHECK_THROWS_AS(Binding::parse({"=x"}), std::invalid_argument);
  CHECK_THROWS_AS(Binding::parse({"mul="}), std::invalid_argument);
  CHECK_THROWS_AS(Binding::parse({"spam=x"}), std::invalid_argument);
  CHECK_THROWS_AS(Binding::parse({"mul=a", "mul=b"}), std::invalid_argument);
}

TEST_CASE("profile registry") {
  CHECK(profile_names().size() == 12);
  CHECK(profile_axioms("poisson") ==
        std::vector<Axiom>{Axiom::Commutativity, Axiom::Associativity,
                           Axiom::Jacobi, Axiom::Leibniz});
  CHECK(profile_axioms("transposed-poisson").back() ==
        Axiom::TransposedLeibniz);
  CHECK(profile_axioms("differential-novikov-poisson").size() == 7);
  CHECK_THROWS_AS(profile_axioms("lie"), std::invalid_argument);
}

TEST_CASE("bracket [e1,e2]=e2 with compatible products") {
  for (const Field& f : {Q, Field::gf(5)}) {
    const std::string fd = f.describe();
    CAPTURE(fd);
    CHECK(profile_passes(check_profile(tb::na_a(f), "transposed-poisson")));
    CHECK(profile_passes(check_profile(tb::na_b(f), "transposed-poisson")));
    CHECK(profile_passes(check_profile(tb::na_d(f), "transposed-poisson")));
    CHECK(profile_passes(check_profile(tb::na_d(f, 3), "transposed-poisson")));
    CHECK(profile_passes(check_profile(tb::ab_b(f), "transposed-poisson")));
    CHECK(profile_passes(check_profile(tb::ab_b(f), "poisson")));
  }
}

TEST_CASE("e1*e2=e1, e2*e2=e2 fails both compatibility rules") {
  for (const Field& f : {Q, Field::gf(7)}) {
    const std::string fd = f.describe();
    CAPTURE(fd);
    AlgebraBundle b = tb::na_c(f);
    CHECK(holds(b, Axiom::Commutativity));
    CHECK(holds(b, Axiom::Associativity));
    CHECK(holds(b, Axiom::Jacobi));

    CheckReport tl = check_identity(b, Axiom::TransposedLeibniz);
    REQUIRE_FALSE(tl.holds);
    REQUIRE(tl.witness.has_value());
    CHECK(tl.witness->part == "");
    CHECK(tl.witness->tuple == std::vector<int>{0, 1, 0});
    CHECK(tl.witness->left == tb::elem(f, {2, 0}));
    CHECK(tl.witness->right == tb::elem(f, {0, 0}));
    CHECK(tl.tuples_checked == 4);

    CheckReport lb = check_identity(b, Axiom::Leibniz);
    REQUIRE_FALSE(lb.holds);
    REQUIRE(lb.witness.has_value());
    CHECK(lb.witness->tuple == std::vector<int>{0, 0, 1});
    CHECK(lb.witness->left == tb::elem(f, {0, 0}));
    CHECK(lb.witness->right == tb::elem(f, {1, 0}));
    CHECK(lb.tuples_checked == 4);

    // later tuples violate the rule too; the reported one is just the first
    auto [l, r] = evaluate_identity_at(b, Axiom::Leibniz, {}, {0, 1, 1});
    CHECK(l == tb::elem(f, {0, 1}));
    CHECK(r == tb::elem(f, {0, 2}));
  }
}

TEST_CASE("product-bracket interplay identities") {
  AlgebraBundle d = tb::na_d(Q);
  for (Axiom a : {Axiom::Gi1, Axiom::Gi2, Axiom::Gi3, Axiom::Gi4, Axiom::Gi5,
                  Axiom::Gi6, Axiom::StrongPoisson})
    CHECK(holds(d, a));
  AlgebraBundle zm = tb::na_a(Q);  // zero product
  AlgebraBundle zb = tb::ab_b(Q);  // zero bracket
  for (Axiom a : {Axiom::Gi1, Axiom::Gi2, Axiom::Gi3, Axiom::Gi4, Axiom::Gi5,
                  Axiom::Gi6, Axiom::StrongPoisson, Axiom::Leibniz,
                  Axiom::TransposedLeibniz}) {
    CHECK(holds(zm, a));
    CHECK(holds(zb, a));
  }
}

TEST_CASE("both rules hold together exactly when the interplay vanishes") {
  AlgebraBundle b = tb::inter3(Q);
  CHECK(profile_passes(check_profile(b, "poisson")));
  CHECK(profile_passes(check_profile(b, "transposed-poisson")));
  CHECK(holds(b, Axiom::Inter0));

  AlgebraBundle d = tb::na_d(Q);  // transposed rule only
  CheckReport rep = check_identity(d, Axiom::Inter0);
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->part == "product-bracket");
  CHECK(rep.witness->tuple == std::vector<int>{0, 0, 1});
  CHECK(rep.witness->left == tb::elem(Q, {0, 1}));
  CHECK(rep.witness->right == tb::elem(Q, {0, 0}));
  CHECK(rep.tuples_checked == 3);
}

TEST_CASE("map-twisted bracket checks") {
  AlgebraBundle b = tb::hom3(Q);
  b.add_map(tpa::identity_map(3, Q, "phi"));
  CHECK(holds(b, Axiom::HomJacobi));
  CHECK(holds(b, Axiom::Varphi2));

  AlgebraBundle c = tb::hom3(Q);
  c.add_map(tb::map_cols(Q, "phi", {{1, 0, 0}, {0, 1, 0}, {1, 0, 0}}));
  CheckReport hj = check_identity(c, Axiom::HomJacobi);
  REQUIRE_FALSE(hj.holds);
  CHECK(hj.witness->tuple == std::vector<int>{0, 1, 2});
  CHECK(hj.witness->left == tb::elem(Q, {0, 1, 0}));
  CHECK(hj.witness->right == tb::elem(Q, {0, 0, 0}));

  CheckReport v2 = check_identity(c, Axiom::Varphi2);
  REQUIRE_FALSE(v2.holds);
  CHECK(v2.witness->tuple == std::vector<int>{1, 2});
  CHECK(v2.witness->left == tb::elem(Q, {0, 0, 0}));
  CHECK(v2.witness->right == tb::elem(Q, {0, -1, 0}));
}

TEST_CASE("non-Lie alternating bracket") {
  AlgebraBundle b = tb::jacobi_fail3(Q);
  CheckReport j = check_identity(b, Axiom::Jacobi);
  REQUIRE_FALSE(j.holds);
  CHECK(j.witness->tuple == std::vector<int>{0, 1, 2});
  CHECK(j.witness->left == tb::elem(Q, {0, 0, -1}));
  CHECK(j.witness->right == tb::elem(Q, {0, 0, 0}));

  // arity-2 instance of the generic identity, bound to the same bracket
  CheckReport fi = check_identity(b, Axiom::FundamentalIdentity,
                                  bind({{"tri", "bracket"}}));
  REQUIRE_FALSE(fi.holds);
  CHECK(fi.witness->tuple == std::vector<int>{0, 1, 2});
  CHECK(fi.witness->left == tb::elem(Q, {0, 0, 0}));
  CHECK(fi.witness->right == tb::elem(Q, {0, 0, 1}));
}

TEST_CASE("ternary bracket engine paths") {
  AlgebraBundle b = tb::ternary3(Q);
  CHECK(holds(b, Axiom::FundamentalIdentity));
  CHECK(holds(b, Axiom::Poisson3Lie));
  CHECK(holds(b, Axiom::Strong3));
  CHECK(holds(b, Axiom::Transposed3Lie));
  CHECK(holds(b, Axiom::Mix3));
  CHECK(holds(b, Axiom::TransposedNLie));
  CHECK(profile_passes(check_profile(b, "tpa-3lie")));
  CHECK(profile_passes(check_profile(b, "strong-poisson-3lie")));

  // arity 2 instance coincides with the transposed compatibility rule
  CheckReport rep = check_identity(tb::na_c(Q), Axiom::TransposedNLie,
                                   bind({{"tri", "bracket"}}));
  REQUIRE_FALSE(rep.holds);
  CHECK(rep.witness->tuple == std::vector<int>{0, 1, 0});
  CHECK(rep.witness->left == tb::elem(Q, {2, 0}));
  CHECK(rep.witness->right == tb::elem(Q, {0, 0}));
}

TEST_CASE("Novikov product family on truncated polynomials") {
  AlgebraBundle good = tb::kx3_euler_np(Q);
  CHECK(profile_passes(check_profile(good, "differential-novikov-poisson")));
  CHECK(profile_passes(check_profile(good, "novikov-poisson")));
  CHECK(profile_passes(check_profile(good, "prelie-poisson")));
  CHECK(profile_passes(check_profile(good, "prelie-com")));

  AlgebraBundle bad = tb::kx3_ddx_np(Q);
  CHECK(holds(bad, Axiom::Np1));
  CHECK(holds(bad, Axiom::NovikovRight));
  CheckReport pc = check_identity(bad, Axiom::PreLieCom);
  REQUIRE_FALSE(pc.holds);
  CHECK(pc.witness->tuple == std::vector<int>{0, 1, 2});
  CHECK(pc.witness->left == tb::elem(Q, {0, 0, 0}));
  CHECK(pc.witness->right == tb::elem(Q, {0, 0, 3}));

  // one-point Novikov product: e1 o e1 = e1 over the zero product
  AlgebraBundle tiny;
  tiny.space = tpa::make_space({"e1", "e2"});
  tiny.field = Q;
  tiny.add_op(tpa::make_op("mul", 2, Symmetry::Symmetric, 2, Q, {}));
  tiny.add_op(tpa::make_op("circ", 2, Symmetry::None, 2, Q,
                           {{{0, 0}, tb::elem(Q, {1, 0})}}));
  CHECK(profile_passes(check_profile(tiny, "novikov-poisson")));
  CHECK(profile_passes(check_profile(tiny, "prelie-poisson")));
}

TEST_CASE("derivation and endomorphism checks") {
  AlgebraBundle b = tb::kx2(Q);
  CHECK(holds(b, Axiom::DerivationOf, bind({{"map", "E"}})));

  CheckReport dd = check_identity(b, Axiom::DerivationOf);  // map defaults D
  REQUIRE_FALSE(dd.holds);
  CHECK(dd.witness->tuple == std::vector<int>{1, 1});
  CHECK(dd.witness->left == tb::elem(Q, {0, 0}));
  CHECK(dd.witness->right == tb::elem(Q, {0, 2}));

  AlgebraBundle k3 = tb::trunc1(Q, 2);
  k3.add_map(tb::euler1(Q, 3));
  CHECK(holds(k3, Axiom::DerivationOf, bind({{"map", "E"}})));

  AlgebraBundle e = tb::trunc1(Q, 1);
  e.add_map(tb::map_cols(Q, "aug", {{1, 0}, {0, 0}}));
  e.add_map(tb::map_cols(Q, "swapish", {{0, 1}, {0, 0}}));
  CHECK(holds(e, Axiom::EndomorphismOf, bind({{"map", "aug"}})));
  CheckReport en =
      check_identity(e, Axiom::EndomorphismOf, bind({{"map", "swapish"}}));
  REQUIRE_FALSE(en.holds);
  CHECK(en.witness->tuple == std::vector<int>{0, 0});
  CHECK(en.witness->left == tb::elem(Q, {0, 1}));
  CHECK(en.witness->right == tb::elem(Q, {0, 0}));
}

TEST_CASE("involutive antimorphisms of the bracket") {
  AlgebraBundle b = tb::na_a(Q);
  b.add_map(tb::map_cols(Q, "f", {{-1, 0}, {0, -1}}));
  CHECK(holds(b, Axiom::Anti));

  AlgebraBundle c = tb::na_a(Q);
  c.add_map(tpa::identity_map(2, Q, "f"));
  CheckReport an = check_identity(c, Axiom::Anti);
  REQUIRE_FALSE(an.holds);
  CHECK(an.witness->part == "anti");
  CHECK(an.witness->tuple == std::vector<int>{0, 1});
  CHECK(an.witness->left == tb::elem(Q, {0, 1}));
  CHECK(an.witness->right == tb::elem(Q, {0, -1}));

  AlgebraBundle d = tb::na_a(Q);
  d.add_map(tb::map_cols(Q, "f", {{1, 0}, {0, 0}}));
  CheckReport inv = check_identity(d, Axiom::Anti);
  REQUIRE_FALSE(inv.holds);
  CHECK(inv.witness->part == "involution");
  CHECK(inv.witness->tuple == std::vector<int>{1});
  CHECK(inv.witness->left == tb::elem(Q, {0, 0}));
  CHECK(inv.witness->right == tb::elem(Q, {0, 1}));
}

TEST_CASE("identities vacuous below their variable count") {
  AlgebraBundle b = tb::na_d(Q);
  b.add_map(tpa::identity_map(2, Q, "f"));
  CheckReport c3 = check_identity(b, Axiom::Const3Extra);
  CHECK(c3.holds);
  CHECK(c3.tuples_checked == 0);  // needs three distinct basis vectors

  CheckReport j = check_identity(b, Axiom::Jacobi);
  CHECK(j.holds);
  CHECK(j.tuples_checked == 0);
}

TEST_CASE("aux derivation identity on degenerate inputs") {
  AlgebraBundle b = tb::na_a(Q);  // zero product kills every term
  b.add_map(tpa::identity_map(2, Q, "D"));
  CHECK(holds(b, Axiom::AuxIdentity));
}

TEST_CASE("tuple counts reflect pruning") {
  AlgebraBundle b = tb::na_d(Q);
  CheckReport pruned = check_identity(b, Axiom::Commutativity);
  CHECK(pruned.holds);
  CHECK(pruned.tuples_checked == 1);
  CheckReport full =
      check_identity(b, Axiom::Commutativity, {}, CheckOptions{false});
  CHECK(full.holds);
  CHECK(full.tuples_checked == 4);
}

TEST_CASE("role and argument validation") {
  AlgebraBundle b = tb::na_c(Q);
  CHECK_THROWS_AS(check_identity(b, Axiom::PreLie), std::invalid_argument);
  CHECK_THROWS_AS(check_identity(b, Axiom::Jacobi, bind({{"bracket", "mul"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_identity(b, Axiom::Poisson3Lie),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_identity(b, Axiom::HomJacobi), std::invalid_argument);
  CHECK_THROWS_AS(
      check_identity(b, Axiom::FundamentalIdentity, bind({{"tri", "mul"}})),
      std::invalid_argument);

  CHECK_THROWS_AS(evaluate_identity_at(b, Axiom::Leibniz, {}, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_identity_at(b, Axiom::Leibniz, {}, {0, 1, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      evaluate_identity_at(b, Axiom::Inter0, {}, {0, 0, 1}, "sideways"),
      std::invalid_argument);

  // part selection: "" means the first part
  auto [l0, r0] = evaluate_identity_at(b, Axiom::Inter0, {}, {0, 0, 1});
  auto [l1, r1] =
      evaluate_identity_at(b, Axiom::Inter0, {}, {0, 0, 1}, "product-bracket");
  CHECK(l0 == l1);
  CHECK(r0 == r1);
}

namespace {

struct LoopCase {
  AlgebraBundle bundle;
  Axiom axiom;
  Binding binding;
};

std::vector<LoopCase> agreement_cases() {
  std::vector<LoopCase> cases;
  auto push = [&](const AlgebraBundle& b, std::vector<Axiom> axs,
                  Binding bi = {}) {
    for (Axiom a : axs) cases.push_back({b, a, bi});
  };

  const std::vector<Axiom> mul_bracket = {
      Axiom::Commutativity, Axiom::Associativity, Axiom::Jacobi,
      Axiom::Leibniz,       Axiom::TransposedLeibniz,
      Axiom::Gi1,           Axiom::Gi2,
      Axiom::Gi3,           Axiom::Gi4,
      Axiom::Gi5,           Axiom::Gi6,
      Axiom::StrongPoisson, Axiom::Inter0};

  for (const Field& f : {Field::rationals(), Field::gf(5)}) {
    AlgebraBundle a = tb::na_a(f);
    a.add_map(tb::map_cols(f, "f", {{0, 1}, {1, 0}}));
    a.add_map(tpa::identity_map(2, f, "D"));
    a.add_map(tb::map_cols(f, "phi", {{1, 1}, {0, 1}}));
    push(a, mul_bracket);
    push(a, {Axiom::Anti, Axiom::Const3Extra, Axiom::AuxIdentity,
             Axiom::HomJacobi, Axiom::Varphi2});

    push(tb::na_c(f), mul_bracket);
    push(tb::na_d(f, 2), mul_bracket);
    push(tb::inter3(f), mul_bracket);
  }

  const std::vector<Axiom> circ_axioms = {
      Axiom::Commutativity, Axiom::Associativity, Axiom::PreLie,
      Axiom::NovikovRight,  Axiom::Np1,           Axiom::Np2,
      Axiom::PreLieCom};
  push(tb::kx3_euler_np(Field::rationals()), circ_axioms);
  push(tb::kx3_ddx_np(Field::rationals()), circ_axioms);

  AlgebraBundle k2 = tb::kx2(Field::rationals());
  push(k2, {Axiom::DerivationOf, Axiom::EndomorphismOf});
  push(k2, {Axiom::DerivationOf, Axiom::EndomorphismOf},
       Binding::parse({"map=E"}));

  AlgebraBundle jf = tb::jacobi_fail3(Field::rationals());
  push(jf, {Axiom::Jacobi});
  push(jf, {Axiom::FundamentalIdentity, Axiom::TransposedNLie},
       Binding::parse({"tri=bracket", "mul=bracket"}));

  AlgebraBundle t3 = tb::ternary3(Field::rationals());
  push(t3, {Axiom::FundamentalIdentity, Axiom::Poisson3Lie, Axiom::Strong3,
            Axiom::Transposed3Lie, Axiom::TransposedNLie, Axiom::Mix3});

  return cases;
}

}  // namespace

TEST_CASE("pruned and full scans agree, witnesses are sound") {
  for (const LoopCase& lc : agreement_cases()) {
    CAPTURE(axiom_name(lc.axiom));
    CheckReport pruned =
        check_identity(lc.bundle, lc.axiom, lc.binding, CheckOptions{true});
    CheckReport full =
        check_identity(lc.bundle, lc.axiom, lc.binding, CheckOptions{false});
    CHECK(pruned.holds == full.holds);
    REQUIRE(pruned.witness.has_value() == full.witness.has_value());
    if (pruned.witness) {
      CHECK(pruned.witness->part == full.witness->part);
      CHECK(pruned.witness->tuple == full.witness->tuple);
      CHECK(pruned.witness->left == full.witness->left);
      CHECK(pruned.witness->right == full.witness->right);
      auto [l, r] =
          evaluate_identity_at(lc.bundle, lc.axiom, lc.binding,
                               pruned.witness->tuple, pruned.witness->part);
      CHECK(l == pruned.witness->left);
      CHECK(r == pruned.witness->right);
      CHECK(l != r);
    }
  }
}
