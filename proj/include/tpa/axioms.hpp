#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"

namespace tpa {

// Closed list of checkable identities. Argument orders and the exact formulas
// are documented in the README; witnesses refer to these orders.
enum class Axiom {
  Commutativity,
  Associativity,
  Jacobi,
  Leibniz,            // [x, y.z] = [x,y].z + y.[x,z]
  TransposedLeibniz,  // 2 z.[x,y] = [z.x, y] + [x, z.y]
  Gi1,                // x.[y,z] + y.[z,x] + z.[x,y] = 0
  Gi2,                // [h.[x,y],z] + [h.[y,z],x] + [h.[z,x],y] = 0
  Gi3,                // [h.x,[y,z]] + [h.y,[z,x]] + [h.z,[x,y]] = 0
  Gi4,                // [h,x].[y,z] + [h,y].[z,x] + [h,z].[x,y] = 0
  Gi5,                // [x.u, y.v] + [x.v, y.u] = 2 u.v.[x,y]
  Gi6,                // x.[u, y.v] + v.[x.y, u] + y.u.[v,x] = 0
  PreLie,
  NovikovRight,       // (x o y) o z = (x o z) o y
  Np1,                // (x.y) o z = x.(y o z)
  Np2,
  PreLieCom,          // x o (y.z) = (x o y).z + y.(x o z)
  StrongPoisson,      // same formula as gi4
  FundamentalIdentity,
  Poisson3Lie,        // [x,y,u.v] = u.[x,y,v] + [x,y,u].v
  Strong3,
  Transposed3Lie,     // 3 u.[x,y,z] = [x.u,y,z] + [x,y.u,z] + [x,y,z.u]
  TransposedNLie,     // n w.mu(x1..xn) = sum_i mu(x1,..,w.xi,..,xn)
  HomJacobi,          // [phi(x),[y,z]] + [phi(y),[z,x]] + [phi(z),[x,y]] = 0
  Varphi2,            // phi(phi([x,y])) = [phi(x), phi(y)]
  Inter0,             // x.[y,z] = 0 and [x.y, z] = 0
  Mix3,               // u.[x,y,z] = 0 and [u.x, y, z] = 0
  Anti,               // f(f(x)) = x and f([x,y]) = -[f(x), f(y)]
  Const3Extra,        // (f(u)-u).(f(x).[y,z] + f(y).[z,x] + f(z).[x,y]) = 0
  AuxIdentity,
  DerivationOf,       // D(op(x1..xk)) = sum_i op(x1,..,D(xi),..,xk)
  EndomorphismOf,     // f(op(x1..xk)) = op(f(x1),..,f(xk))
};

std::string axiom_name(Axiom a);
Axiom axiom_from_name(const std::string& name);
const std::vector<Axiom>& all_axioms();

// Maps identity roles (mul, bracket, circ, tri, map, f, phi, op) to op/map
// names in the bundle. Unspecified roles default to the role's own name,
// except role "map" which defaults to "D" and role "op" which defaults
// to "mul".
struct Binding {
  std::map<std::string, std::string> roles;

  std::string resolve(const std::string& role) const;
  static Binding parse(const std::vector<std::string>& role_eq_name);
};

struct ViolationWitness {
  std::string part;  // sub-identity name for multi-part axioms, else ""
  std::vector<int> tuple;
  Element left;
  Element right;
};

struct CheckReport {
  Axiom axiom = Axiom::Commutativity;
  bool holds = false;
  std::optional<ViolationWitness> witness;
  long long tuples_checked = 0;
};

struct CheckOptions {
  bool prune = true;  // symmetry-based tuple pruning; verdict-equivalent
};

// Exhaustive check on basis tuples (sufficient by multilinearity). On failure
// the witness is the first failing tuple in lexicographic order of the
// axiom's documented argument list.
CheckReport check_identity(const AlgebraBundle& bundle, Axiom axiom,
                           const Binding& binding = {},
                           const CheckOptions& opts = {});

// Re-evaluates one side pair at an explicit tuple; used to confirm witnesses.
std::pair<Element, Element> evaluate_identity_at(const AlgebraBundle& bundle,
                                                 Axiom axiom,
                                                 const Binding& binding,
                                                 const std::vector<int>& tuple,
                                                 const std::string& part = "");

// Named bundles of identities (poisson, transposed-poisson, ...).
const std::vector<std::string>& profile_names();
const std::vector<Axiom>& profile_axioms(const std::string& profile);
std::vector<CheckReport> check_profile(const AlgebraBundle& bundle,
                                       const std::string& profile,
                                       const Binding& binding = {},
                                       const CheckOptions& opts = {});
bool profile_passes(const std::vector<CheckReport>& reports);

}  // namespace tpa
