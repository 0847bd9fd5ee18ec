#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpa/scalar.hpp"

namespace tpa {

struct BasisSpace {
  int dim = 0;
  std::vector<std::string> labels;  // unique, one per basis vector
};

// Validates label count and uniqueness.
BasisSpace make_space(std::vector<std::string> labels);

using Element = std::vector<Scalar>;

Element zero_element(int dim, const Field& f);
Element basis_element(int dim, const Field& f, int i);
bool is_zero_element(const Element& v);
void add_scaled(Element& acc, const Scalar& c, const Element& v);
Element scaled(const Scalar& c, const Element& v);
Element element_add(Element a, const Element& b);
Element element_sub(Element a, const Element& b);
Element element_neg(Element a);
std::string element_str(const Element& v, const BasisSpace& space);

enum class Symmetry { None, Symmetric, Alternating };

std::string symmetry_name(Symmetry s);
Symmetry symmetry_from_name(const std::string& s);

// Arity-k multilinear operation stored as sparse structure constants.
// Canonical storage: symmetric keys non-decreasing, alternating keys strictly
// increasing (signs folded in), zero values omitted.
struct MultiLinearOp {
  std::string name;
  int arity = 2;
  Symmetry symmetry = Symmetry::None;
  int dim = 0;
  Field field = Field::rationals();
  std::map<std::vector<int>, Element> table;

  bool operator==(const MultiLinearOp& o) const {
    return arity == o.arity && symmetry == o.symmetry && dim == o.dim &&
           field == o.field && table == o.table;
  }
};

// Canonicalizes an arbitrary-key table; rejects entries inconsistent with the
// declared symmetry and validates dimensions, index ranges, and field tags.
MultiLinearOp normalize_op(const MultiLinearOp& raw);

// Convenience: normalize_op over a freshly assembled table.
MultiLinearOp make_op(std::string name, int arity, Symmetry sym, int dim,
                      const Field& f,
                      std::map<std::vector<int>, Element> table);

// Value on a basis tuple, resolving symmetry (sign for alternating,
// zero on repeated alternating indices).
Element op_basis_value(const MultiLinearOp& op, const std::vector<int>& idx);

// Multilinear extension to arbitrary elements.
Element evaluate_op(const MultiLinearOp& op, const std::vector<Element>& args);

bool op_is_zero(const MultiLinearOp& op);

// Square matrix, column j = image of basis vector j; entry (i,j) at a[i*dim+j].
struct LinearMap {
  std::string name;
  int dim = 0;
  Field field = Field::rationals();
  std::vector<Scalar> a;

  const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
  Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }

  bool operator==(const LinearMap& o) const {
    return dim == o.dim && field == o.field && a == o.a;
  }
};

LinearMap zero_map(int dim, const Field& f, std::string name = "");
LinearMap identity_map(int dim, const Field& f, std::string name = "id");
Element apply_map(const LinearMap& m, const Element& v);
LinearMap compose(const LinearMap& f, const LinearMap& g);  // x -> f(g(x))
bool maps_commute(const LinearMap& f, const LinearMap& g);

// A based space with named operations and maps: the unit of verification,
// construction, and I/O.
struct AlgebraBundle {
  BasisSpace space;
  Field field = Field::rationals();
  std::vector<MultiLinearOp> ops;
  std::vector<LinearMap> maps;
  std::map<std::string, std::string> metadata;

  const MultiLinearOp* find_op(const std::string& name) const;
  const LinearMap* find_map(const std::string& name) const;
  const MultiLinearOp& op(const std::string& name) const;
  const LinearMap& map(const std::string& name) const;
  void add_op(MultiLinearOp op);    // enforces unique name and consistency
  void add_map(LinearMap m);
};

// Relabels basis vector i to position perm[i]; op/map/metadata-preserving.
AlgebraBundle permute_basis(const AlgebraBundle& b, const std::vector<int>& perm);

// Reduction mod p of a rational bundle; throws if p divides any denominator.
AlgebraBundle to_gf(const AlgebraBundle& b, std::int64_t p);
Scalar scalar_to_gf(const Scalar& s, const Field& gf);

}  // namespace tpa
