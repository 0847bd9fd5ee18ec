#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/axioms.hpp"

namespace tpa {

// Thrown when a construction's input fails a stated hypothesis. Carries the
// failing check reports (with witnesses) when the hypothesis is an identity.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what,
                    std::vector<CheckReport> failing = {})
      : std::runtime_error(what), reports_(std::move(failing)) {}
  const std::vector<CheckReport>& reports() const { return reports_; }

 private:
  std::vector<CheckReport> reports_;
};

// [x,y] = x o y - y o x
MultiLinearOp commutator_bracket(const MultiLinearOp& circ);

// x o y = x * D(y), for D a derivation of the commutative product.
MultiLinearOp gelfand_product(const MultiLinearOp& mul, const LinearMap& D);

// [x,y] = x * D(y) - D(x) * y; coincides with the commutator of the
// one-derivation product (asserted internally).
MultiLinearOp derivation_bracket(const MultiLinearOp& mul, const LinearMap& D);

// [x,y] = D1(x) * D2(y) - D1(y) * D2(x) for commuting derivations D1, D2.
MultiLinearOp two_derivation_bracket(const MultiLinearOp& mul,
                                     const LinearMap& d1, const LinearMap& d2);

// [x,y]_h = h * [x,y]; requires a transposed Poisson input pair.
MultiLinearOp rescaled_bracket(const MultiLinearOp& mul,
                               const MultiLinearOp& bracket, const Element& h);

struct HomLieResult {
  LinearMap phi;                               // x -> h * x
  CheckReport hom_jacobi;
  CheckReport varphi2;
  std::optional<CheckReport> multiplicativity;  // set when phi o phi == phi
};

// Twisting map phi_h(x) = h * x of a transposed Poisson pair, with the
// twisted Jacobi reports.
HomLieResult hom_lie_structure(const MultiLinearOp& mul,
                               const MultiLinearOp& bracket, const Element& h);

// Tensor product bundle: product (x1 (x) x2) * (y1 (x) y2) = x1 y1 (x) x2 y2,
// paired op spread over both factors. The paired ops must share arity 2 and
// symmetry (alternating with alternating, plain with plain).
AlgebraBundle tensor_mixed(const AlgebraBundle& a, const std::string& op_a,
                           const AlgebraBundle& b, const std::string& op_b);

// [x,y,z] = D(x)*[y,z] + D(y)*[z,x] + D(z)*[x,y] for D a derivation of both
// operations. Input pair must be transposed Poisson, or Poisson satisfying
// the strong identity.
MultiLinearOp three_lie_from_derivation(const MultiLinearOp& mul,
                                        const MultiLinearOp& bracket,
                                        const LinearMap& D);

struct InvolutionThreeLie {
  MultiLinearOp op;  // [x,y,z] = f(x)*[y,z] + f(y)*[z,x] + f(z)*[x,y]
  CheckReport const3_extra;
  // Only produced when const3_extra holds.
  std::optional<CheckReport> transposed_3lie;
};

// Ternary bracket from an involutive product endomorphism that reverses the
// bracket sign. Input pair must be transposed Poisson.
InvolutionThreeLie three_lie_from_involution(const MultiLinearOp& mul,
                                             const MultiLinearOp& bracket,
                                             const LinearMap& f);

// [x,y,z] = x*[y,z] + y*[z,x] + z*[x,y]; requires a Poisson input pair.
MultiLinearOp three_lie_from_poisson(const MultiLinearOp& mul,
                                     const MultiLinearOp& bracket);

struct LadderLimits {
  int max_arity = 5;  // arity of the produced op
  int max_dim = 16;
};

// mu_{n+1}(x_1..x_{n+1}) = sum_i (-1)^(i+1) D(x_i) * mu_n(.. x_i omitted ..).
// Requires (mul, mu_n) to satisfy the n-ary transposed profile and D to
// derive both operations.
MultiLinearOp nlie_ladder_step(const MultiLinearOp& mul,
                               const MultiLinearOp& mu_n, const LinearMap& D,
                               const LadderLimits& limits = {});

// [x_1..x_n] = det(maps_i(x_j)) expanded through the commutative product.
// Each map must be a derivation of mul or the identity; all must commute.
MultiLinearOp wedge_bracket(const std::vector<LinearMap>& maps,
                            const MultiLinearOp& mul);

}  // namespace tpa
