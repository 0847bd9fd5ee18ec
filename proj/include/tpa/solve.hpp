#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"

namespace tpa {

// What the unknown vector of a SolutionSpace parametrizes.
enum class UnknownKind {
  MapEntries,        // d*d entries of a linear map, row-major
  SymmetricProduct,  // structure constants of a symmetric bilinear product
};

// Compatibility rule linking an unknown commutative product to a fixed
// bracket.
enum class CompatRule {
  TransposedLeibniz,  // 2 z*[x,y] = [z*x, y] + [x, z*y]
  Leibniz,            // [x, y*z] = [x,y]*z + y*[x,z]
};

const char* compat_rule_name(CompatRule rule);
CompatRule compat_rule_from_name(const std::string& name);

// Solution set of a homogeneous linear system over map entries or symmetric
// structure constants. The basis rows are in reduced row-echelon form over
// the unknown vector, so equal spaces have identical bases.
//
// Unknown layout:
//   MapEntries:       index i*d + j  <->  at(i, j), i.e. column j is D(e_j)
//   SymmetricProduct: index pair(i,j)*d + k  <->  coefficient of e_k in
//                     e_i * e_j, pairs (i, j) with i <= j in lex order
struct SolutionSpace {
  UnknownKind kind = UnknownKind::MapEntries;
  int space_dim = 0;
  Field field = Field::rationals();
  std::vector<std::vector<Scalar>> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
  int unknown_count() const;

  LinearMap map_at(int k, const std::string& name = "D") const;
  MultiLinearOp op_at(int k, const std::string& name = "mul") const;

  // Linear combination of basis rows with the given coordinates.
  LinearMap combine_map(const std::vector<Scalar>& coords,
                        const std::string& name = "D") const;
  MultiLinearOp combine_op(const std::vector<Scalar>& coords,
                           const std::string& name = "mul") const;

  bool contains(std::vector<Scalar> unknown_vector) const;
  bool contains_map(const LinearMap& m) const;
  bool contains_op(const MultiLinearOp& op) const;

  static int sym_pair_index(int i, int j, int d);
};

// Maps D with D(x o y) = D(x) o y + x o D(y) simultaneously for every listed
// bilinear op. Throws std::invalid_argument if the list is empty or contains
// an op of arity != 2, std::out_of_range for unknown names.
SolutionSpace derivation_space(const AlgebraBundle& b,
                               const std::vector<std::string>& op_names);

// Same system, optionally intersected with the commutant of a fixed map
// (rows D*C - C*D = 0).
SolutionSpace joint_derivation_space(
    const AlgebraBundle& b, const std::vector<std::string>& op_names,
    const std::optional<LinearMap>& commuting_with = std::nullopt);

// Commutative products compatible with a fixed alternating bracket under the
// chosen rule. Unknowns are the d*d(d+1)/2 symmetric structure constants.
SolutionSpace compatible_symmetric_products(const MultiLinearOp& bracket,
                                            CompatRule rule);

// Instantiates each coordinate vector against the space basis and keeps the
// product iff associativity holds on all basis triples. Throws
// std::invalid_argument on a coordinate length mismatch or when the space
// does not parametrize symmetric products.
std::vector<std::pair<std::vector<Scalar>, MultiLinearOp>> filter_associative(
    const SolutionSpace& space,
    const std::vector<std::vector<Scalar>>& samples);

// Reduced row-echelon form in place (first nonzero pivot, rows compacted);
// returns the rank. Exposed for reuse by the search and report layers.
int rref_in_place(std::vector<std::vector<Scalar>>& rows, const Field& f);

// RREF basis of the nullspace of the given constraint rows.
std::vector<std::vector<Scalar>> nullspace_basis(
    std::vector<std::vector<Scalar>> constraints, int unknowns,
    const Field& f);

}  // namespace tpa
