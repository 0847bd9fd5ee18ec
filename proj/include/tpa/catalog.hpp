#pragma once

#include <string>
#include <vector>

#include "tpa/algebra.hpp"

namespace tpa {

// A named algebra with the profiles it is certified to satisfy. Every
// builder in this header re-checks the claimed profiles before returning
// and throws std::logic_error if a claim does not hold.
struct CatalogEntry {
  std::string id;
  AlgebraBundle bundle;
  std::vector<std::string> claimed_profiles;
  std::map<std::string, Scalar> parameters;
  std::string note;  // free-text caveats, emitted as metadata
};

// The nine two-dimensional pairs (commutative product, Lie bracket) from
// the classification over an algebraically closed field: five with the
// zero bracket, four with [e1,e2] = e2. Parametric entry 2d-nonabelian-d
// is instantiated at lambda = 1.
std::vector<CatalogEntry> catalog_2d_transposed(
    const Field& f = Field::rationals());

// 2d-nonabelian-d at an arbitrary nonzero lambda: e1*e1 = lambda e1,
// e1*e2 = lambda e2, [e1,e2] = e2. Zero lambda is rejected.
CatalogEntry catalog_2d_nonabelian_d(const Scalar& lambda);

// Five two-dimensional commutative associative algebras with their full
// derivation spaces and the brackets [x,y] = x.D(y) - D(x).y they induce.
// The derivation space of each entry is recomputed exactly and compared
// against the stated dimensions (4, 0, 1, 1, 2), which hold over the
// rationals and every odd prime field. Parametric entries der-4 and der-5
// are instantiated at a = 1 and b = 1.
std::vector<CatalogEntry> catalog_2d_derivation_induced(
    const Field& f = Field::rationals());

// der-4 at arbitrary a: mul e1*e1 = e1, e1*e2 = e2; bracket [e1,e2] = a e2,
// induced by the derivation diag(0, a).
CatalogEntry catalog_derivation_entry_4(const Scalar& a);

// der-5 at arbitrary b: mul e1*e1 = e2; bracket [e1,e2] = b e2 as printed
// in the source table. No derivation of this algebra induces a nonzero
// bracket (see the entry's note), so the bracket is carried as stated
// rather than derived.
CatalogEntry catalog_derivation_entry_5(const Scalar& b);

// k[x1..xn] with x_i^{cap_i} = 0; basis monomials ordered by degree, ties
// by descending exponent vector. dim = prod(cap_i). Includes the Euler
// maps E_i = x_i d/dx_i, which descend to the quotient (plain d/dx_i does
// not). caps must all be >= 2.
AlgebraBundle truncated_polynomial_algebra(
    const std::vector<std::string>& vars, const std::vector<int>& caps,
    const Field& f = Field::rationals());

// The two-dimensional pre-Lie product e1 o e1 = e1, e1 o e2 = e2 paired
// with the commutative product e1*e1 = a e2 (default a = 1). The pre-Lie
// product is associative but not Novikov, and the pair satisfies np2 while
// np1 fails at (e1, e1, e1) whenever a != 0 (left 0, right a e2), so the
// entry claims no profile; the note records the witness. The commutator of
// the pre-Lie product together with this commutative product reproduces
// entry 2d-nonabelian-b exactly.
CatalogEntry prelie_poisson_2d_example(const Field& f = Field::rationals());
CatalogEntry prelie_poisson_2d_example_at(const Scalar& a);

// Basis-independent integers for telling bundles apart:
//   (dim L.L, dim [L,L], dim ann(L,.), dim Z(L,[,]),
//    dim joint derivations of both ops, rank of tr(L_x L_y))
// where L_x is left multiplication by the symmetric op. Equal fingerprints
// mean "indistinguishable by these invariants", not "isomorphic".
std::vector<int> invariant_fingerprint(const AlgebraBundle& bundle,
                                       const std::string& mul_name = "mul",
                                       const std::string& bracket_name =
                                           "bracket");

}  // namespace tpa
