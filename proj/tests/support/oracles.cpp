#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace oracles {

using gmod::fp_add;
using gmod::fp_inv;
using gmod::fp_mul;
using gmod::fp_sub;
using gmod::LeadTerm;
using gmod::Term;

namespace {

std::optional<LeadTerm> naive_lead(const FreeElement& v) {
  for (int i = 0; i < v.parent().rank(); ++i)
    if (!v.component(i).is_zero())
      return LeadTerm{i, v.component(i).leading_term().mono,
                      v.component(i).leading_term().coeff};
  return std::nullopt;
}

}  // namespace

FreeElement naive_reduce(const FreeElement& v,
                         const std::vector<FreeElement>& gens) {
  const std::int64_t p = v.parent().ring()->characteristic();
  FreeElement h = v;
  bool changed = true;
  while (changed) {
    changed = false;
    auto lt = naive_lead(h);
    if (!lt) break;
    for (const FreeElement& g : gens) {
      auto gl = naive_lead(g);
      if (!gl || gl->pos != lt->pos) continue;
      if (!gmod::mono_divides(gl->mono, lt->mono)) continue;
      std::int64_t q = fp_mul(lt->coeff, fp_inv(gl->coeff, p), p);
      h = gmod::element_sub(
          h, gmod::element_mul_term(g, q, gmod::mono_div(lt->mono, gl->mono)));
      changed = true;
      break;
    }
  }
  return h;
}

std::vector<FreeElement> naive_completion(const FreeModule& parent,
                                          std::vector<FreeElement> gens) {
  std::vector<FreeElement> basis;
  for (FreeElement& g : gens)
    if (!g.is_zero()) basis.push_back(std::move(g));
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t n = basis.size();
    for (size_t i = 0; i < n && !grew; ++i)
      for (size_t j = i + 1; j < n && !grew; ++j) {
        auto li = naive_lead(basis[i]);
        auto lj = naive_lead(basis[j]);
        if (li->pos != lj->pos) continue;
        Monomial lcm = gmod::mono_lcm(li->mono, lj->mono);
        const std::int64_t p = parent.ring()->characteristic();
        FreeElement s = gmod::element_sub(
            gmod::element_mul_term(basis[i], fp_inv(li->coeff, p),
                                   gmod::mono_div(lcm, li->mono)),
            gmod::element_mul_term(basis[j], fp_inv(lj->coeff, p),
                                   gmod::mono_div(lcm, lj->mono)));
        FreeElement r = naive_reduce(s, basis);
        if (!r.is_zero()) {
          basis.push_back(std::move(r));
          grew = true;
        }
      }
  }
  return basis;
}

bool spair_criterion_holds(const std::vector<FreeElement>& basis) {
  const size_t n = basis.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      auto li = naive_lead(basis[i]);
      auto lj = naive_lead(basis[j]);
      if (!li || !lj || li->pos != lj->pos) continue;
      const std::int64_t p = basis[i].parent().ring()->characteristic();
      Monomial lcm = gmod::mono_lcm(li->mono, lj->mono);
      FreeElement s = gmod::element_sub(
          gmod::element_mul_term(basis[i], fp_inv(li->coeff, p),
                                 gmod::mono_div(lcm, li->mono)),
          gmod::element_mul_term(basis[j], fp_inv(lj->coeff, p),
                                 gmod::mono_div(lcm, lj->mono)));
      if (!naive_reduce(s, basis).is_zero()) return false;
    }
  return true;
}

Mat Mat::zero(int r, int c) {
  Mat m;
  m.rows = r;
  m.cols = c;
  m.a.assign(r, std::vector<std::int64_t>(c, 0));
  return m;
}

int rank_of(Mat m, std::int64_t p) {
  int rank = 0;
  int lead = 0;
  for (int col = 0; col < m.cols && lead < m.rows; ++col) {
    int piv = -1;
    for (int r = lead; r < m.rows; ++r)
      if (m.a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m.a[piv], m.a[lead]);
    std::int64_t inv = fp_inv(m.a[lead][col], p);
    for (int c = col; c < m.cols; ++c) m.a[lead][c] = fp_mul(m.a[lead][c], inv, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == lead || m.a[r][col] == 0) continue;
      std::int64_t f = m.a[r][col];
      for (int c = col; c < m.cols; ++c)
        m.a[r][c] = fp_sub(m.a[r][c], fp_mul(f, m.a[lead][c], p), p);
    }
    ++lead;
    ++rank;
  }
  return rank;
}

Mat mat_mul(const Mat& x, const Mat& y, std::int64_t p) {
  Mat out = Mat::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.a[i][k] == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        out.a[i][j] = fp_add(out.a[i][j], fp_mul(x.a[i][k], y.a[k][j], p), p);
    }
  return out;
}

namespace {

void own_monomials(int nvars, int d, int pos, std::vector<int>& cur,
                   std::vector<Monomial>& out) {
  if (d < 0) return;
  if (pos == nvars - 1) {
    cur[pos] = d;
    out.emplace_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur[pos] = e;
    own_monomials(nvars, d - e, pos + 1, cur, out);
  }
}

std::vector<Monomial> monomials(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> cur(ring->nvars(), 0);
  own_monomials(ring->nvars(), d, 0, cur, out);
  return out;
}

}  // namespace

Slice::Slice(const FPModule& M, int d)
    : d_(d), p_(M.ring() ? M.ring()->characteristic() : 2) {
  if (M.is_zero()) return;
  const RingPtr& ring = M.ring();
  for (int i = 0; i < M.ambient().rank(); ++i)
    for (Monomial& m : monomials(ring, d - M.ambient().twist(i))) {
      basis_pos_.push_back(i);
      basis_mono_.push_back(std::move(m));
    }
  for (const FreeElement& g : M.relations()) {
    int dg = *g.degree();
    for (const Monomial& m : monomials(ring, d - dg)) {
      std::vector<std::int64_t> row(basis_pos_.size(), 0);
      for (int i = 0; i < M.ambient().rank(); ++i)
        for (const Term& t : g.component(i).terms()) {
          int c = column_of(i, gmod::mono_mul(t.mono, m));
          row[c] = fp_add(row[c], t.coeff, p_);
        }
      row = reduce(std::move(row));
      int pc = -1;
      for (size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) {
          pc = static_cast<int>(c);
          break;
        }
      if (pc < 0) continue;
      std::int64_t inv = fp_inv(row[pc], p_);
      for (auto& v : row) v = fp_mul(v, inv, p_);
      span_.push_back(std::move(row));
      span_pivot_.push_back(pc);
    }
  }
  std::vector<bool> is_pivot(basis_pos_.size(), false);
  for (int pc : span_pivot_) is_pivot[pc] = true;
  col_of_quotient_.assign(basis_pos_.size(), -1);
  for (size_t c = 0; c < basis_pos_.size(); ++c)
    if (!is_pivot[c]) {
      col_of_quotient_[c] = static_cast<int>(quotient_cols_.size());
      quotient_cols_.push_back(static_cast<int>(c));
    }
  dim_ = static_cast<int>(quotient_cols_.size());
}

int Slice::column_of(int pos, const Monomial& m) const {
  for (size_t c = 0; c < basis_pos_.size(); ++c)
    if (basis_pos_[c] == pos && basis_mono_[c] == m) return static_cast<int>(c);
  throw gmod::structural_error("oracle slice: column not found");
}

std::vector<std::int64_t> Slice::reduce(std::vector<std::int64_t> row) const {
  for (size_t r = 0; r < span_.size(); ++r) {
    std::int64_t f = row[span_pivot_[r]];
    if (f == 0) continue;
    for (size_t c = 0; c < row.size(); ++c)
      if (span_[r][c] != 0)
        row[c] = fp_sub(row[c], fp_mul(f, span_[r][c], p_), p_);
  }
  return row;
}

std::vector<std::int64_t> Slice::project(
    const std::vector<Polynomial>& comps) const {
  std::vector<std::int64_t> row(basis_pos_.size(), 0);
  for (size_t i = 0; i < comps.size(); ++i)
    for (const Term& t : comps[i].terms()) {
      int c = column_of(static_cast<int>(i), t.mono);
      row[c] = fp_add(row[c], t.coeff, p_);
    }
  row = reduce(std::move(row));
  std::vector<std::int64_t> out(quotient_cols_.size());
  for (size_t k = 0; k < quotient_cols_.size(); ++k)
    out[k] = row[quotient_cols_[k]];
  return out;
}

int hf_oracle(const FPModule& M, int d) { return Slice(M, d).dim(); }

Mat mult_matrix(const FPModule& M, const Slice& from, const Slice& to,
                const Polynomial& f) {
  Mat out = Mat::zero(to.dim(), from.dim());
  if (f.is_zero()) return out;
  const RingPtr& ring = M.ring();
  for (int j = 0; j < from.dim(); ++j) {
    int col = from.quotient_cols_[j];
    std::vector<Polynomial> comps(M.ambient().rank(), Polynomial::zero(ring));
    comps[from.basis_pos_[col]] =
        gmod::poly_mul_term(f, 1, from.basis_mono_[col]);
    std::vector<std::int64_t> img = to.project(comps);
    for (int i = 0; i < to.dim(); ++i) out.a[i][j] = img[i];
  }
  return out;
}

int hom_dim_oracle(const FPModule& A, const FPModule& B, int d) {
  const RingPtr& ring = A.ring();
  const std::int64_t p = ring->characteristic();
  const int ra = A.ambient().rank();
  const int rb = B.ambient().rank();

  struct Unknown {
    int i, l;
    Monomial m;
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < ra; ++i)
    for (int l = 0; l < rb; ++l)
      for (Monomial& m :
           monomials(ring, A.ambient().twist(i) - B.ambient().twist(l) + d))
        unknowns.push_back(Unknown{i, l, std::move(m)});
  if (unknowns.empty()) return 0;

  auto kernel_dim = [&](bool zero_map_constraints) {
    std::vector<std::vector<std::int64_t>> rows;
    auto add_constraints = [&](const std::vector<Polynomial>& source_comps,
                               int source_degree) {
      Slice target(B, source_degree + d);
      std::vector<std::vector<std::int64_t>> per_unknown;
      for (const Unknown& un : unknowns) {
        std::vector<Polynomial> comps(rb, Polynomial::zero(ring));
        const Polynomial& ci = source_comps[un.i];
        if (!ci.is_zero()) comps[un.l] = gmod::poly_mul_term(ci, 1, un.m);
        per_unknown.push_back(target.project(comps));
      }
      size_t nrows = per_unknown.empty() ? 0 : per_unknown[0].size();
      for (size_t r = 0; r < nrows; ++r) {
        std::vector<std::int64_t> row(unknowns.size());
        for (size_t u = 0; u < unknowns.size(); ++u) row[u] = per_unknown[u][r];
        rows.push_back(std::move(row));
      }
    };
    if (zero_map_constraints) {
      for (int i = 0; i < ra; ++i) {
        std::vector<Polynomial> comps(ra, Polynomial::zero(ring));
        comps[i] = Polynomial::constant(ring, 1);
        add_constraints(comps, A.ambient().twist(i));
      }
    } else {
      for (const FreeElement& rel : A.relations())
        add_constraints(rel.components(), *rel.degree());
    }
    Mat m;
    m.rows = static_cast<int>(rows.size());
    m.cols = static_cast<int>(unknowns.size());
    m.a = std::move(rows);
    return static_cast<int>(unknowns.size()) - rank_of(std::move(m), p);
  };

  return kernel_dim(false) - kernel_dim(true);
}

namespace {

std::vector<std::vector<int>> subsets(int r, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int j = start; j < r; ++j) {
      cur.push_back(j);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Chain Koszul slice dims and differential ranks in one internal degree.
std::vector<int> koszul_chain_dims_and_ranks(const FPModule& M,
                                             const std::vector<Polynomial>& xs,
                                             int delta,
                                             std::vector<int>* ranks) {
  const std::int64_t p = M.ring()->characteristic();
  const int r = static_cast<int>(xs.size());
  std::vector<int> xdeg;
  for (const Polynomial& f : xs) xdeg.push_back(*f.degree());

  std::vector<std::vector<Slice>> blocks(r + 1);
  std::vector<int> dims(r + 1, 0);
  for (int i = 0; i <= r; ++i)
    for (const auto& T : subsets(r, i)) {
      int s = 0;
      for (int j : T) s += xdeg[j];
      blocks[i].emplace_back(M, delta - s);
      dims[i] += blocks[i].back().dim();
    }
  if (ranks) {
    ranks->assign(r + 1, 0);
    for (int i = 1; i <= r; ++i) {
      auto from = subsets(r, i);
      auto to = subsets(r, i - 1);
      std::vector<int> to_offset(to.size() + 1, 0);
      for (size_t b = 0; b < to.size(); ++b)
        to_offset[b + 1] = to_offset[b] + blocks[i - 1][b].dim();
      std::vector<int> from_offset(from.size() + 1, 0);
      for (size_t b = 0; b < from.size(); ++b)
        from_offset[b + 1] = from_offset[b] + blocks[i][b].dim();
      Mat d = Mat::zero(dims[i - 1], dims[i]);
      for (size_t c = 0; c < from.size(); ++c) {
        const std::vector<int>& T = from[c];
        for (size_t t = 0; t < T.size(); ++t) {
          std::vector<int> S = T;
          S.erase(S.begin() + t);
          size_t rdx = std::lower_bound(to.begin(), to.end(), S) - to.begin();
          Polynomial entry = (t % 2 == 0) ? xs[T[t]] : gmod::poly_neg(xs[T[t]]);
          Mat blk = mult_matrix(M, blocks[i][c], blocks[i - 1][rdx], entry);
          for (int a = 0; a < blk.rows; ++a)
            for (int b = 0; b < blk.cols; ++b)
              d.a[to_offset[rdx] + a][from_offset[c] + b] =
                  fp_add(d.a[to_offset[rdx] + a][from_offset[c] + b],
                         blk.a[a][b], p);
        }
      }
      (*ranks)[i] = rank_of(std::move(d), p);
    }
  }
  return dims;
}

}  // namespace

int koszul_chain_homology_dim(const FPModule& M,
                              const std::vector<Polynomial>& xs, int i,
                              int delta) {
  const int r = static_cast<int>(xs.size());
  if (i < 0 || i > r) return 0;
  std::vector<int> ranks;
  std::vector<int> dims = koszul_chain_dims_and_ranks(M, xs, delta, &ranks);
  int rank_in = (i + 1 <= r) ? ranks[i + 1] : 0;
  int rank_out = (i >= 1) ? ranks[i] : 0;
  return dims[i] - rank_out - rank_in;
}

int koszul_cochain_cohomology_dim(const FPModule& M,
                                  const std::vector<Polynomial>& xs, int i,
                                  int delta) {
  const std::int64_t p = M.ring()->characteristic();
  const int r = static_cast<int>(xs.size());
  if (i < 0 || i > r) return 0;
  std::vector<int> xdeg;
  for (const Polynomial& f : xs) xdeg.push_back(*f.degree());

  std::vector<std::vector<Slice>> blocks(r + 1);
  std::vector<int> dims(r + 1, 0);
  for (int k = 0; k <= r; ++k)
    for (const auto& T : subsets(r, k)) {
      int s = 0;
      for (int j : T) s += xdeg[j];
      blocks[k].emplace_back(M, delta + s);
      dims[k] += blocks[k].back().dim();
    }
  auto delta_rank = [&](int k) -> int {
    if (k < 0 || k >= r) return 0;
    auto from = subsets(r, k);
    auto to = subsets(r, k + 1);
    std::vector<int> fo(from.size() + 1, 0), to_off(to.size() + 1, 0);
    for (size_t b = 0; b < from.size(); ++b)
      fo[b + 1] = fo[b] + blocks[k][b].dim();
    for (size_t b = 0; b < to.size(); ++b)
      to_off[b + 1] = to_off[b] + blocks[k + 1][b].dim();
    Mat d = Mat::zero(dims[k + 1], dims[k]);
    for (size_t c = 0; c < to.size(); ++c) {
      const std::vector<int>& T = to[c];
      for (size_t t = 0; t < T.size(); ++t) {
        std::vector<int> S = T;
        S.erase(S.begin() + t);
        size_t sdx =
            std::lower_bound(from.begin(), from.end(), S) - from.begin();
        Polynomial entry = (t % 2 == 0) ? xs[T[t]] : gmod::poly_neg(xs[T[t]]);
        Mat blk = mult_matrix(M, blocks[k][sdx], blocks[k + 1][c], entry);
        for (int a = 0; a < blk.rows; ++a)
          for (int b = 0; b < blk.cols; ++b)
            d.a[to_off[c] + a][fo[sdx] + b] =
                fp_add(d.a[to_off[c] + a][fo[sdx] + b], blk.a[a][b], p);
      }
    }
    return rank_of(std::move(d), p);
  };
  return dims[i] - delta_rank(i) - delta_rank(i - 1);
}

ColimitResult cech_colimit_top(const FPModule& M,
                               const std::vector<Polynomial>& xs, int delta,
                               int max_stage) {
  const std::int64_t p = M.ring()->characteristic();
  const int r = static_cast<int>(xs.size());
  int s = 0;
  for (const Polynomial& f : xs) s += *f.degree();
  Polynomial prod = Polynomial::constant(M.ring(), 1);
  for (const Polynomial& f : xs) prod = gmod::poly_mul(prod, f);

  ColimitResult out;
  std::vector<Slice> V;
  std::vector<std::vector<std::vector<std::int64_t>>> W_echelon(max_stage + 1);
  std::vector<std::vector<int>> W_pivot(max_stage + 1);
  auto insert_span = [&](int t, std::vector<std::int64_t> row) {
    auto& ech = W_echelon[t];
    auto& piv = W_pivot[t];
    for (size_t k = 0; k < ech.size(); ++k) {
      std::int64_t f = row[piv[k]];
      if (f == 0) continue;
      for (size_t c = 0; c < row.size(); ++c)
        if (ech[k][c] != 0) row[c] = fp_sub(row[c], fp_mul(f, ech[k][c], p), p);
    }
    int pc = -1;
    for (size_t c = 0; c < row.size(); ++c)
      if (row[c] != 0) {
        pc = static_cast<int>(c);
        break;
      }
    if (pc < 0) return false;
    std::int64_t inv = fp_inv(row[pc], p);
    for (auto& v : row) v = fp_mul(v, inv, p);
    ech.push_back(std::move(row));
    piv.push_back(pc);
    return true;
  };

  V.reserve(max_stage);
  for (int t = 1; t <= max_stage; ++t) {
    V.emplace_back(M, delta + t * s);
    const Slice& vt = V.back();
    for (int j = 0; j < r; ++j) {
      Polynomial power = xs[j];
      for (int k = 1; k < t; ++k) power = gmod::poly_mul(power, xs[j]);
      Slice from(M, delta + t * s - t * *xs[j].degree());
      Mat img = mult_matrix(M, from, vt, power);
      for (int c = 0; c < img.cols; ++c) {
        std::vector<std::int64_t> row(vt.dim());
        for (int a = 0; a < vt.dim(); ++a) row[a] = img.a[a][c];
        insert_span(t, std::move(row));
      }
    }
    out.stage_dims.push_back(vt.dim() - static_cast<int>(W_echelon[t].size()));
  }

  auto composite_rank = [&](int t, int T) -> int {
    const Slice& from = V[t - 1];
    const Slice& to = V[T - 1];
    Polynomial power = Polynomial::constant(M.ring(), 1);
    for (int k = 0; k < T - t; ++k) power = gmod::poly_mul(power, prod);
    Mat img = mult_matrix(M, from, to, power);
    Mat stacked =
        Mat::zero(static_cast<int>(W_echelon[T].size()) + img.cols, to.dim());
    for (size_t k = 0; k < W_echelon[T].size(); ++k)
      stacked.a[k] = W_echelon[T][k];
    for (int c = 0; c < img.cols; ++c)
      for (int a = 0; a < to.dim(); ++a)
        stacked.a[W_echelon[T].size() + c][a] = img.a[a][c];
    int total = rank_of(std::move(stacked), p);
    return total - static_cast<int>(W_echelon[T].size());
  };

  if (max_stage >= 3) {
    int r_last = composite_rank(max_stage - 1, max_stage);
    int r_prev = composite_rank(max_stage - 2, max_stage);
    out.stabilized = (r_last == r_prev);
    out.stabilized_dim = r_last;
  } else if (max_stage == 2) {
    out.stabilized_dim = composite_rank(1, 2);
  }
  return out;
}

}  // namespace oracles
