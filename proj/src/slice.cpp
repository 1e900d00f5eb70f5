#include "gmod/slice.hpp"

#include <algorithm>
#include <map>

namespace gmod {

namespace {

void enumerate_exponents(int nvars, int pos, int remaining, std::vector<int>& cur,
                         std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate_exponents(nvars, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> cur(ring->nvars(), 0);
  enumerate_exponents(ring->nvars(), 0, d, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_cmp(a, b) == std::strong_ordering::greater;
  });
  return out;
}

std::vector<ModTerm> free_basis_of_degree(const FreeModule& F, int d) {
  std::vector<ModTerm> out;
  for (int i = 0; i < F.rank(); ++i)
    for (Monomial& m : monomials_of_degree(F.ring(), d - F.twist(i)))
      out.push_back(ModTerm{i, std::move(m)});
  std::sort(out.begin(), out.end(), [](const ModTerm& a, const ModTerm& b) {
    return mod_term_cmp(a, b) == std::strong_ordering::greater;
  });
  return out;
}

Rref::Rref(int ncols, std::int64_t p)
    : ncols_(ncols), p_(p), pivot_of_col_(ncols, -1) {}

bool Rref::insert(std::vector<std::int64_t> row) {
  row = reduce(std::move(row));
  int pc = -1;
  for (int c = 0; c < ncols_; ++c)
    if (row[c] != 0) {
      pc = c;
      break;
    }
  if (pc < 0) return false;
  std::int64_t inv = fp_inv(row[pc], p_);
  for (int c = pc; c < ncols_; ++c) row[c] = fp_mul(row[c], inv, p_);
  // clear this column in existing rows
  for (auto& r : rows_) {
    std::int64_t f = r[pc];
    if (f == 0) continue;
    for (int c = pc; c < ncols_; ++c)
      r[c] = fp_sub(r[c], fp_mul(f, row[c], p_), p_);
  }
  pivot_of_col_[pc] = static_cast<int>(rows_.size());
  pivot_col_.push_back(pc);
  rows_.push_back(std::move(row));
  return true;
}

std::vector<std::int64_t> Rref::reduce(std::vector<std::int64_t> row) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    std::int64_t f = row[pivot_col_[r]];
    if (f == 0) continue;
    const auto& pr = rows_[r];
    for (int c = 0; c < ncols_; ++c)
      if (pr[c] != 0) row[c] = fp_sub(row[c], fp_mul(f, pr[c], p_), p_);
  }
  return row;
}

std::vector<int> Rref::nonpivot_columns() const {
  std::vector<int> out;
  for (int c = 0; c < ncols_; ++c)
    if (pivot_of_col_[c] < 0) out.push_back(c);
  return out;
}

std::vector<std::vector<std::int64_t>> Rref::kernel_basis() const {
  std::vector<std::vector<std::int64_t>> out;
  for (int f : nonpivot_columns()) {
    std::vector<std::int64_t> v(ncols_, 0);
    v[f] = 1;
    for (size_t r = 0; r < rows_.size(); ++r)
      v[pivot_col_[r]] = fp_neg(rows_[r][f], p_);
    out.push_back(std::move(v));
  }
  return out;
}

GradedSlice::GradedSlice(const FPModule& M, int d)
    : d_(d),
      p_(M.ring() ? M.ring()->characteristic() : 2),
      ambient_basis_(free_basis_of_degree(M.ambient(), d)),
      rel_span_(static_cast<int>(ambient_basis_.size()), p_) {
  for (size_t c = 0; c < ambient_basis_.size(); ++c)
    col_index_.emplace(std::make_pair(ambient_basis_[c].pos,
                                      ambient_basis_[c].mono.exponents()),
                       static_cast<int>(c));
  for (const FreeElement& g : M.relations()) {
    int dg = *g.degree();
    for (const Monomial& m : monomials_of_degree(M.ring(), d - dg)) {
      std::vector<std::int64_t> row(ambient_basis_.size(), 0);
      for (int i = 0; i < M.ambient().rank(); ++i)
        for (const Term& t : g.component(i).terms()) {
          auto it = col_index_.find(
              std::make_pair(i, mono_mul(t.mono, m).exponents()));
          if (it == col_index_.end())
            throw structural_error("slice bookkeeping out of range");
          row[it->second] = fp_add(row[it->second], t.coeff, p_);
        }
      rel_span_.insert(std::move(row));
    }
  }
  quotient_cols_ = rel_span_.nonpivot_columns();
}

std::vector<std::int64_t> GradedSlice::project(const FreeElement& v) const {
  if (!v.is_zero() && *v.degree() != d_)
    throw structural_error("element degree does not match the slice");
  std::vector<std::int64_t> row(ambient_basis_.size(), 0);
  for (int i = 0; i < static_cast<int>(v.components().size()); ++i)
    for (const Term& t : v.component(i).terms()) {
      auto it = col_index_.find(std::make_pair(i, t.mono.exponents()));
      if (it == col_index_.end())
        throw structural_error("element does not lie in the slice");
      row[it->second] = fp_add(row[it->second], t.coeff, p_);
    }
  row = rel_span_.reduce(std::move(row));
  std::vector<std::int64_t> out(quotient_cols_.size());
  for (size_t k = 0; k < quotient_cols_.size(); ++k)
    out[k] = row[quotient_cols_[k]];
  return out;
}

std::vector<std::vector<std::int64_t>> multiplication_matrix(
    const FPModule& M, const GradedSlice& from, const GradedSlice& to,
    const Polynomial& f) {
  if (f.is_zero())
    return std::vector<std::vector<std::int64_t>>(
        to.dim(), std::vector<std::int64_t>(from.dim(), 0));
  if (from.degree() + *f.degree() != to.degree())
    throw structural_error("multiplication degree mismatch");
  std::vector<std::vector<std::int64_t>> out(
      to.dim(), std::vector<std::int64_t>(from.dim(), 0));
  for (int j = 0; j < from.dim(); ++j) {
    const ModTerm& mt = from.ambient_basis()[from.quotient_columns()[j]];
    std::vector<Polynomial> comps(M.ambient().rank(),
                                  Polynomial::zero(M.ring()));
    comps[mt.pos] = poly_mul_term(f, 1, mt.mono);
    FreeElement img(M.ambient(), std::move(comps));
    std::vector<std::int64_t> col = to.project(img);
    for (int i = 0; i < to.dim(); ++i) out[i][j] = col[i];
  }
  return out;
}

}  // namespace gmod
