#include "tpa/solve.hpp"

#include <map>
#include <stdexcept>

namespace tpa {

namespace {

bool row_is_zero(const std::vector<Scalar>& row) {
  for (const auto& x : row) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<Scalar> zero_row(int n, const Field& f) {
  return std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(f));
}

int leading_col(const std::vector<Scalar>& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (!row[c].is_zero()) return static_cast<int>(c);
  }
  return -1;
}

}  // namespace

const char* compat_rule_name(CompatRule rule) {
  return rule == CompatRule::TransposedLeibniz ? "transposed" : "leibniz";
}

CompatRule compat_rule_from_name(const std::string& name) {
  if (name == "transposed" || name == "transposed_leibniz")
    return CompatRule::TransposedLeibniz;
  if (name == "leibniz") return CompatRule::Leibniz;
  throw std::invalid_argument("unknown compatibility rule '" + name +
                              "', expected transposed or leibniz");
}

int rref_in_place(std::vector<std::vector<Scalar>>& rows, const Field& f) {
  if (rows.empty()) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  const int nrows = static_cast<int>(rows.size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r) {
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const Scalar inv = rows[rank][col].inverse();
    for (auto& x : rows[rank]) x = x * inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Scalar c = rows[r][col];
      for (int cc = col; cc < ncols; ++cc)
        rows[r][cc] = rows[r][cc] - c * rows[rank][cc];
    }
    ++rank;
  }
  rows.resize(static_cast<std::size_t>(rank), zero_row(ncols, f));
  return rank;
}

std::vector<std::vector<Scalar>> nullspace_basis(
    std::vector<std::vector<Scalar>> constraints, int unknowns,
    const Field& f) {
  for (const auto& row : constraints) {
    if (static_cast<int>(row.size()) != unknowns)
      throw std::invalid_argument("constraint row has wrong length");
  }
  rref_in_place(constraints, f);

  std::vector<int> pivot_col(constraints.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(unknowns), false);
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    pivot_col[r] = leading_col(constraints[r]);
    is_pivot[static_cast<std::size_t>(pivot_col[r])] = true;
  }

  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < unknowns; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    auto v = zero_row(unknowns, f);
    v[static_cast<std::size_t>(free)] = Scalar::one(f);
    for (std::size_t r = 0; r < constraints.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] =
          -constraints[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  rref_in_place(basis, f);
  return basis;
}

int SolutionSpace::sym_pair_index(int i, int j, int d) {
  if (i > j) std::swap(i, j);
  return i * d - i * (i - 1) / 2 + (j - i);
}

int SolutionSpace::unknown_count() const {
  const int d = space_dim;
  return kind == UnknownKind::MapEntries ? d * d : d * d * (d + 1) / 2;
}

namespace {

LinearMap map_from_vector(const SolutionSpace& s,
                          const std::vector<Scalar>& v,
                          const std::string& name) {
  LinearMap m = zero_map(s.space_dim, s.field, name);
  m.a = v;
  return m;
}

MultiLinearOp op_from_vector(const SolutionSpace& s,
                             const std::vector<Scalar>& v,
                             const std::string& name) {
  const int d = s.space_dim;
  std::map<std::vector<int>, Element> table;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      Element val(static_cast<std::size_t>(d), Scalar::zero(s.field));
      const int base = SolutionSpace::sym_pair_index(i, j, d) * d;
      for (int k = 0; k < d; ++k)
        val[static_cast<std::size_t>(k)] =
            v[static_cast<std::size_t>(base + k)];
      if (!is_zero_element(val)) table[{i, j}] = std::move(val);
    }
  }
  return make_op(name, 2, Symmetry::Symmetric, d, s.field, std::move(table));
}

std::vector<Scalar> combined(const SolutionSpace& s,
                             const std::vector<Scalar>& coords) {
  if (static_cast<int>(coords.size()) != s.dimension())
    throw std::invalid_argument("coordinate length mismatch: expected " +
                                std::to_string(s.dimension()) + ", got " +
                                std::to_string(coords.size()));
  auto v = zero_row(s.unknown_count(), s.field);
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (coords[t].is_zero()) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      v[c] = v[c] + coords[t] * s.basis[t][c];
  }
  return v;
}

}  // namespace

LinearMap SolutionSpace::map_at(int k, const std::string& name) const {
  if (kind != UnknownKind::MapEntries)
    throw std::invalid_argument("space does not hold linear maps");
  return map_from_vector(*this, basis.at(static_cast<std::size_t>(k)), name);
}

MultiLinearOp SolutionSpace::op_at(int k, const std::string& name) const {
  if (kind != UnknownKind::SymmetricProduct)
    throw std::invalid_argument("space does not hold symmetric products");
  return op_from_vector(*this, basis.at(static_cast<std::size_t>(k)), name);
}

LinearMap SolutionSpace::combine_map(const std::vector<Scalar>& coords,
                                     const std::string& name) const {
  if (kind != UnknownKind::MapEntries)
    throw std::invalid_argument("space does not hold linear maps");
  return map_from_vector(*this, combined(*this, coords), name);
}

MultiLinearOp SolutionSpace::combine_op(const std::vector<Scalar>& coords,
                                        const std::string& name) const {
  if (kind != UnknownKind::SymmetricProduct)
    throw std::invalid_argument("space does not hold symmetric products");
  return op_from_vector(*this, combined(*this, coords), name);
}

bool SolutionSpace::contains(std::vector<Scalar> v) const {
  if (static_cast<int>(v.size()) != unknown_count())
    throw std::invalid_argument("unknown vector has wrong length");
  for (const auto& row : basis) {
    const int pc = leading_col(row);
    if (pc < 0) continue;
    const Scalar c = v[static_cast<std::size_t>(pc)];
    if (c.is_zero()) continue;
    for (std::size_t cc = 0; cc < v.size(); ++cc) v[cc] = v[cc] - c * row[cc];
  }
  return row_is_zero(v);
}

bool SolutionSpace::contains_map(const LinearMap& m) const {
  if (kind != UnknownKind::MapEntries)
    throw std::invalid_argument("space does not hold linear maps");
  if (m.dim != space_dim || m.field != field)
    throw std::invalid_argument("map '" + m.name +
                                "' inconsistent with solution space");
  return contains(m.a);
}

bool SolutionSpace::contains_op(const MultiLinearOp& op) const {
  if (kind != UnknownKind::SymmetricProduct)
    throw std::invalid_argument("space does not hold symmetric products");
  if (op.arity != 2 || op.dim != space_dim || op.field != field)
    throw std::invalid_argument("op '" + op.name +
                                "' inconsistent with solution space");
  if (op.symmetry == Symmetry::Alternating)
    throw std::invalid_argument("op '" + op.name + "' is not symmetric");
  const int d = space_dim;
  auto v = zero_row(unknown_count(), field);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const Element val = op_basis_value(op, {i, j});
      if (op.symmetry == Symmetry::None &&
          val != op_basis_value(op, {j, i}))
        throw std::invalid_argument("op '" + op.name + "' is not symmetric");
      const int base = sym_pair_index(i, j, d) * d;
      for (int k = 0; k < d; ++k)
        v[static_cast<std::size_t>(base + k)] =
            val[static_cast<std::size_t>(k)];
    }
  }
  return contains(std::move(v));
}

namespace {

// Rows of the linear system D(e_i o e_j) - D(e_i) o e_j - e_i o D(e_j) = 0
// over the map entries m[a*d + r] = at(a, r).
void append_derivation_rows(std::vector<std::vector<Scalar>>& rows,
                            const AlgebraBundle& b, const MultiLinearOp& op) {
  const int d = b.space.dim;
  const Field& f = b.field;
  std::vector<std::vector<Element>> c(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    c[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      c[static_cast<std::size_t>(i)].push_back(op_basis_value(op, {i, j}));
  }
  auto cv = [&](int i, int j, int k) -> const Scalar& {
    return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
            [static_cast<std::size_t>(k)];
  };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int a = 0; a < d; ++a) {
        auto row = zero_row(d * d, f);
        for (int r = 0; r < d; ++r)
          row[static_cast<std::size_t>(a * d + r)] =
              row[static_cast<std::size_t>(a * d + r)] + cv(i, j, r);
        for (int bb = 0; bb < d; ++bb) {
          row[static_cast<std::size_t>(bb * d + i)] =
              row[static_cast<std::size_t>(bb * d + i)] - cv(bb, j, a);
          row[static_cast<std::size_t>(bb * d + j)] =
              row[static_cast<std::size_t>(bb * d + j)] - cv(i, bb, a);
        }
        if (!row_is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
}

// Rows of D*C - C*D = 0 for a fixed map C.
void append_commutant_rows(std::vector<std::vector<Scalar>>& rows,
                           const LinearMap& c) {
  const int d = c.dim;
  const Field& f = c.field;
  for (int a = 0; a < d; ++a) {
    for (int j = 0; j < d; ++j) {
      auto row = zero_row(d * d, f);
      for (int bb = 0; bb < d; ++bb) {
        row[static_cast<std::size_t>(a * d + bb)] =
            row[static_cast<std::size_t>(a * d + bb)] + c.at(bb, j);
        row[static_cast<std::size_t>(bb * d + j)] =
            row[static_cast<std::size_t>(bb * d + j)] - c.at(a, bb);
      }
      if (!row_is_zero(row)) rows.push_back(std::move(row));
    }
  }
}

}  // namespace

SolutionSpace joint_derivation_space(
    const AlgebraBundle& b, const std::vector<std::string>& op_names,
    const std::optional<LinearMap>& commuting_with) {
  if (op_names.empty())
    throw std::invalid_argument("no ops listed for the derivation system");
  std::vector<const MultiLinearOp*> ops;
  ops.reserve(op_names.size());
  for (const auto& n : op_names) {
    const MultiLinearOp& op = b.op(n);
    if (op.arity != 2)
      throw std::invalid_argument("op '" + n + "' is not bilinear");
    ops.push_back(&op);
  }
  if (commuting_with) {
    if (commuting_with->dim != b.space.dim || commuting_with->field != b.field)
      throw std::invalid_argument(
          "commuting_with map inconsistent with the bundle");
  }

  std::vector<std::vector<Scalar>> rows;
  for (const auto* op : ops) append_derivation_rows(rows, b, *op);
  if (commuting_with) append_commutant_rows(rows, *commuting_with);

  SolutionSpace s;
  s.kind = UnknownKind::MapEntries;
  s.space_dim = b.space.dim;
  s.field = b.field;
  s.basis = nullspace_basis(std::move(rows), b.space.dim * b.space.dim,
                            b.field);
  return s;
}

SolutionSpace derivation_space(const AlgebraBundle& b,
                               const std::vector<std::string>& op_names) {
  return joint_derivation_space(b, op_names, std::nullopt);
}

SolutionSpace compatible_symmetric_products(const MultiLinearOp& bracket,
                                            CompatRule rule) {
  if (bracket.arity != 2)
    throw std::invalid_argument("bracket '" + bracket.name +
                                "' is not bilinear");
  if (bracket.symmetry != Symmetry::Alternating)
    throw std::invalid_argument("bracket '" + bracket.name +
                                "' must be tagged alternating");
  const int d = bracket.dim;
  const Field& f = bracket.field;
  const int nunk = d * d * (d + 1) / 2;

  std::vector<std::vector<Element>> beta(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    beta[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      beta[static_cast<std::size_t>(i)].push_back(
          op_basis_value(bracket, {i, j}));
  }
  auto bv = [&](int i, int j, int k) -> const Scalar& {
    return beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
               [static_cast<std::size_t>(k)];
  };
  auto idx = [&](int i, int j, int k) {
    return static_cast<std::size_t>(
        SolutionSpace::sym_pair_index(i, j, d) * d + k);
  };
  const Scalar two = Scalar::from_int(2, f);

  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int l = 0; l < d; ++l) {
        for (int a = 0; a < d; ++a) {
          auto row = zero_row(nunk, f);
          if (rule == CompatRule::TransposedLeibniz) {
            // 2 z*[x,y] - [z*x, y] - [x, z*y] at (x,y,z) = (e_i,e_j,e_l)
            for (int r = 0; r < d; ++r)
              row[idx(l, r, a)] = row[idx(l, r, a)] + two * bv(i, j, r);
            for (int m = 0; m < d; ++m) {
              row[idx(l, i, m)] = row[idx(l, i, m)] - bv(m, j, a);
              row[idx(l, j, m)] = row[idx(l, j, m)] - bv(i, m, a);
            }
          } else {
            // [x, y*z] - [x,y]*z - y*[x,z] at (x,y,z) = (e_i,e_j,e_l)
            for (int m = 0; m < d; ++m)
              row[idx(j, l, m)] = row[idx(j, l, m)] + bv(i, m, a);
            for (int r = 0; r < d; ++r) {
              row[idx(r, l, a)] = row[idx(r, l, a)] - bv(i, j, r);
              row[idx(j, r, a)] = row[idx(j, r, a)] - bv(i, l, r);
            }
          }
          if (!row_is_zero(row)) rows.push_back(std::move(row));
        }
      }
    }
  }

  SolutionSpace s;
  s.kind = UnknownKind::SymmetricProduct;
  s.space_dim = d;
  s.field = f;
  s.basis = nullspace_basis(std::move(rows), nunk, f);
  return s;
}

namespace {

bool op_associative(const MultiLinearOp& op) {
  const int d = op.dim;
  std::vector<Element> e;
  e.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) e.push_back(basis_element(d, op.field, i));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const Element left =
            evaluate_op(op, {op_basis_value(op, {i, j}), e[static_cast<std::size_t>(k)]});
        const Element right =
            evaluate_op(op, {e[static_cast<std::size_t>(i)], op_basis_value(op, {j, k})});
        if (left != right) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::pair<std::vector<Scalar>, MultiLinearOp>> filter_associative(
    const SolutionSpace& space,
    const std::vector<std::vector<Scalar>>& samples) {
  if (space.kind != UnknownKind::SymmetricProduct)
    throw std::invalid_argument("space does not hold symmetric products");
  std::vector<std::pair<std::vector<Scalar>, MultiLinearOp>> kept;
  for (const auto& coords : samples) {
    MultiLinearOp op = space.combine_op(coords);
    if (op_associative(op)) kept.emplace_back(coords, std::move(op));
  }
  return kept;
}

}  // namespace tpa
