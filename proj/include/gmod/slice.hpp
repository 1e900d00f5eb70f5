#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gmod/fp_module.hpp"

namespace gmod {

/// All monomials of total degree d, descending grevlex. Empty for d < 0.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d);

/// Module monomials m*e_i of a free module in degree d, sorted descending
/// in the position-over-term order.
std::vector<ModTerm> free_basis_of_degree(const FreeModule& F, int d);

/// Dense row-echelon workspace over F_p. Rows are reduced against existing
/// pivots on insertion; pivot columns are recorded.
class Rref {
 public:
  explicit Rref(int ncols, std::int64_t p);

  /// Reduce `row` against the current basis and, if nonzero, insert it as a
  /// new pivot row. Returns false if the row reduced to zero.
  bool insert(std::vector<std::int64_t> row);
  /// Reduce a vector without inserting.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> row) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  bool is_pivot(int col) const { return pivot_of_col_[col] >= 0; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  std::vector<int> nonpivot_columns() const;
  /// Basis of the kernel of the matrix whose rows were inserted, one vector
  /// per non-pivot column.
  std::vector<std::vector<std::int64_t>> kernel_basis() const;

 private:
  int ncols_;
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> rows_;  // monic at pivot, rref
  std::vector<int> pivot_col_;                   // per row
  std::vector<int> pivot_of_col_;                // per column, row index or -1
};

/// Degree-d slice of an FPModule computed by plain linear algebra on the
/// presentation: a monomial basis of the ambient slice, the row echelon of
/// the relation span, and the surviving (non-pivot) quotient basis.
class GradedSlice {
 public:
  GradedSlice(const FPModule& M, int d);

  int degree() const { return d_; }
  int ambient_dim() const { return static_cast<int>(ambient_basis_.size()); }
  int dim() const { return static_cast<int>(quotient_cols_.size()); }
  const std::vector<ModTerm>& ambient_basis() const { return ambient_basis_; }
  /// Indices (into the ambient basis) of the quotient's coordinate basis.
  const std::vector<int>& quotient_columns() const { return quotient_cols_; }

  /// Quotient coordinates of an ambient element of degree d.
  std::vector<std::int64_t> project(const FreeElement& v) const;

 private:
  int d_;
  std::int64_t p_;
  std::vector<ModTerm> ambient_basis_;
  std::map<std::pair<int, std::vector<int>>, int> col_index_;
  Rref rel_span_;
  std::vector<int> quotient_cols_;
};

/// Matrix of multiplication by a homogeneous f: M_d -> M_{d+deg f}, columns
/// indexed by `from`'s quotient basis, rows by `to`'s.
std::vector<std::vector<std::int64_t>> multiplication_matrix(
    const FPModule& M, const GradedSlice& from, const GradedSlice& to,
    const Polynomial& f);

}  // namespace gmod
