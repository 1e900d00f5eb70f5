#include "gmod/invariants.hpp"

#include <algorithm>

#include "gmod/slice.hpp"

namespace gmod {

namespace {

/// Hom(F, S(w)) as a free module: generator dual to a twist-a generator
/// sits in degree -w - a.
FreeModule dual_free(const FreeModule& F, int w) {
  std::vector<int> tw;
  tw.reserve(F.rank());
  for (int a : F.twists()) tw.push_back(-w - a);
  return FreeModule(F.ring(), tw);
}

/// Transpose of d: F_{i+1} -> F_i as a map Hom(F_i,S(w)) -> Hom(F_{i+1},S(w)).
FreeMap dual_map(const FreeMap& d, int w) {
  FreeModule src = dual_free(d.target(), w);
  FreeModule tgt = dual_free(d.source(), w);
  std::vector<std::vector<Polynomial>> m(
      tgt.rank(), std::vector<Polynomial>(src.rank(),
                                          Polynomial::zero(d.source().ring())));
  for (int i = 0; i < d.target().rank(); ++i)
    for (int j = 0; j < d.source().rank(); ++j)
      m[j][i] = d.entry(i, j);
  return FreeMap(src, tgt, std::move(m));
}

/// ker(out)/im(in) for a pair of composable free maps (in may be null).
FPModule free_pair_homology(const FreeMap* in, const FreeMap& out) {
  const FreeModule& F = out.source();
  SyzygyResult syz = syzygies_with_degrees(out.target(), out.columns(),
                                           F.twists());
  std::vector<FreeElement> A;
  for (const FreeElement& s : syz.generators) {
    FreeElement a(F, s.components());
    if (!a.is_zero()) A.push_back(std::move(a));
  }
  A = minimal_generators(F, std::move(A));
  if (A.empty()) return zero_module(F.ring());

  std::vector<int> adeg;
  for (const FreeElement& a : A) adeg.push_back(*a.degree());
  FreeModule EA(F.ring(), adeg);
  std::vector<FreeElement> rels;
  if (in) {
    SubmoduleSolver solver(F, A);
    for (int j = 0; j < in->source().rank(); ++j)
      rels.push_back(solver.coordinates(in->column(j)));
  }
  for (FreeElement& s : syzygies(F, A).generators) rels.push_back(std::move(s));
  return present(EA, std::move(rels));
}

}  // namespace

FPModule ext_module(int i, const FPModule& M, int twist) {
  if (i < 0) throw structural_error("ext index must be nonnegative");
  if (M.is_zero()) return zero_module(M.ring());
  const int n = M.ring()->nvars();
  Complex res = free_resolution(M, n + 1);
  const int len = res.length();
  if (i > len) return zero_module(M.ring());

  // dual complex D^j = Hom(F_j, S(twist)) with delta^j = (d_{j+1})^T
  auto delta = [&](int j) {  // D^j -> D^{j+1}, defined for 0 <= j < len
    return dual_map(res.differential(j + 1).lift(), twist);
  };

  if (len == 0) {
    // M free: Ext^0 = Hom(F_0, S(twist)), higher Ext vanish
    if (i > 0) return zero_module(M.ring());
    return free_as_module(dual_free(res.term(0).ambient(), twist));
  }

  if (i == 0) {
    FreeMap out = delta(0);
    return free_pair_homology(nullptr, out);
  }
  if (i == len) {
    // coker(delta^{len-1}): homology with zero outgoing map
    FreeMap in = delta(len - 1);
    FreeModule top = in.target();
    std::vector<FreeElement> rels = in.columns();
    std::vector<FreeElement> nz;
    for (FreeElement& c : rels)
      if (!c.is_zero()) nz.push_back(std::move(c));
    return present(top, std::move(nz));
  }
  FreeMap in = delta(i - 1);
  FreeMap out = delta(i);
  return free_pair_homology(&in, out);
}

namespace {

/// Numerator of the Hilbert series as an integer Laurent polynomial,
/// represented by (offset, coefficients).
struct IntPoly {
  int offset = 0;  // exponent of the first coefficient
  std::vector<long long> c;
};

IntPoly hilbert_numerator(const Complex& res) {
  int lo = 0, hi = 0;
  bool any = false;
  for (int i = 0; i <= res.length(); ++i)
    for (int t : res.term(i).ambient().twists()) {
      if (!any) {
        lo = hi = t;
        any = true;
      }
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
  IntPoly out;
  out.offset = lo;
  out.c.assign(any ? hi - lo + 1 : 1, 0);
  for (int i = 0; i <= res.length(); ++i)
    for (int t : res.term(i).ambient().twists())
      out.c[t - lo] += (i % 2 == 0) ? 1 : -1;
  return out;
}

long long eval_at_one(const IntPoly& f) {
  long long s = 0;
  for (long long v : f.c) s += v;
  return s;
}

/// Divide by (1 - t); exact when f(1) = 0 (then q_k = sum_{j<=k} f_j).
IntPoly divide_one_minus_t(const IntPoly& f) {
  IntPoly q;
  q.offset = f.offset;
  if (f.c.size() <= 1) return q;
  q.c.assign(f.c.size() - 1, 0);
  long long acc = 0;
  for (size_t k = 0; k < q.c.size(); ++k) {
    acc += f.c[k];
    q.c[k] = acc;
  }
  return q;
}

}  // namespace

int krull_dim(const FPModule& M) {
  if (M.is_zero()) return -1;
  const int n = M.ring()->nvars();
  Complex res = free_resolution(M, n + 1);
  IntPoly num = hilbert_numerator(res);
  int mult = 0;
  while (mult <= n && !num.c.empty() && eval_at_one(num) == 0) {
    num = divide_one_minus_t(num);
    ++mult;
  }
  return n - mult;
}

int depth(const FPModule& M) {
  if (M.is_zero()) throw structural_error("depth undefined for the zero module");
  return M.ring()->nvars() - pd(M);
}

bool is_cohen_macaulay(const FPModule& M) {
  if (M.is_zero()) return true;
  return depth(M) == krull_dim(M);
}

bool is_finite_length(const FPModule& M) { return krull_dim(M) <= 0; }

InvariantReport invariants(const FPModule& M) {
  InvariantReport r;
  if (M.is_zero()) {
    r.dim = -1;
    r.depth = kDepthInfinity;
    r.is_cm = true;
    r.is_finite_length = true;
    return r;
  }
  r.dim = krull_dim(M);
  r.depth = depth(M);
  r.is_cm = (r.dim == r.depth);
  r.is_finite_length = (r.dim <= 0);
  return r;
}

DegreeWindow finite_support_window(const FPModule& M) {
  DegreeWindow w;
  if (M.is_zero()) return w;  // empty
  const int n = M.ring()->nvars();
  Complex res = free_resolution(M, n + 1);
  int lo = M.ambient().twist(0), hi = M.ambient().twist(0);
  for (int t : M.ambient().twists()) lo = std::min(lo, t);
  int max_res_twist = lo;
  for (int i = 0; i <= res.length(); ++i)
    for (int t : res.term(i).ambient().twists())
      max_res_twist = std::max(max_res_twist, t);
  // for finite length the Hilbert series is the numerator/(1-t)^n, a
  // polynomial of degree (max twist) - n
  w.lo = lo;
  w.hi = max_res_twist - n;
  return w;
}

FPModule matlis_dual_finite(const FPModule& M) {
  const RingPtr& ring = M.ring();
  if (!is_finite_length(M))
    throw structural_error(
        "Matlis dual representable only for finite length modules");
  if (M.is_zero()) return zero_module(ring);
  const std::int64_t p = ring->characteristic();
  const int n = ring->nvars();

  DegreeWindow win = finite_support_window(M);
  // slices of M and variable action matrices
  std::vector<GradedSlice> slices;
  for (int d = win.lo; d <= win.hi + 1; ++d) slices.emplace_back(M, d);
  auto slice_at = [&](int d) -> const GradedSlice& {
    return slices.at(d - win.lo);
  };
  // action of x_v on the dual in degree e: transpose of x_v: M_{-e-1} -> M_{-e}
  // dual degrees run over [-win.hi, -win.lo]
  const int elo = -win.hi, ehi = -win.lo;
  auto dual_dim = [&](int e) {
    if (-e < win.lo || -e > win.hi) return 0;
    return slice_at(-e).dim();
  };
  // act[e - elo][v] : W_e -> W_{e+1}
  std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> act(
      static_cast<size_t>(ehi - elo + 1));
  for (int e = elo; e <= ehi; ++e) {
    act[e - elo].resize(n);
    for (int v = 0; v < n; ++v) {
      int rows = dual_dim(e + 1), cols = dual_dim(e);
      std::vector<std::vector<std::int64_t>> m(
          rows, std::vector<std::int64_t>(cols, 0));
      if (rows > 0 && cols > 0) {
        // A = x_v : M_{-e-1} -> M_{-e}; dual action = A^T
        const GradedSlice& from = slice_at(-e - 1);
        const GradedSlice& to = slice_at(-e);
        auto A = multiplication_matrix(M, from, to,
                                       Polynomial::variable(ring, v));
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < cols; ++j) m[i][j] = A[j][i];
      }
      act[e - elo][v] = std::move(m);
    }
  }

  // choose generators degree by degree: extend the reached subspace
  struct Gen {
    int degree;
    std::vector<std::int64_t> vec;  // in W_degree coordinates
  };
  std::vector<Gen> gens;
  // span_reached[e] = basis (rref) of the submodule generated so far, in W_e
  std::vector<Rref> reached;
  for (int e = elo; e <= ehi; ++e) reached.emplace_back(dual_dim(e), p);
  for (int e = elo; e <= ehi; ++e) {
    Rref& cur = reached[e - elo];
    if (e > elo) {
      // push forward the previous degree's span through every variable
      const Rref& prev = reached[e - elo - 1];
      for (const auto& row : prev.rows())
        for (int v = 0; v < n; ++v) {
          const auto& m = act[e - 1 - elo][v];
          if (m.empty()) continue;
          std::vector<std::int64_t> img(dual_dim(e), 0);
          for (int i = 0; i < dual_dim(e); ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < dual_dim(e - 1); ++j)
              s = fp_add(s, fp_mul(m[i][j], row[j], p), p);
            img[i] = s;
          }
          cur.insert(std::move(img));
        }
    }
    // new generators: standard coordinate vectors completing the span
    for (int c = 0; c < dual_dim(e); ++c) {
      std::vector<std::int64_t> unit(dual_dim(e), 0);
      unit[c] = 1;
      if (cur.insert(unit)) gens.push_back(Gen{e, unit});
    }
  }

  // ambient free module on the chosen generators
  std::vector<int> gtw;
  for (const Gen& g : gens) gtw.push_back(g.degree);
  FreeModule Famb(ring, gtw);

  // evaluation of ambient basis elements (monomial, generator) in W_d,
  // built incrementally degree by degree
  struct EvalKey {
    int gen;
    std::vector<int> expo;
    bool operator<(const EvalKey& o) const {
      if (gen != o.gen) return gen < o.gen;
      return expo < o.expo;
    }
  };
  std::map<EvalKey, std::vector<std::int64_t>> eval;
  for (size_t g = 0; g < gens.size(); ++g)
    eval[{static_cast<int>(g), Monomial::one(n).exponents()}] = gens[g].vec;

  std::vector<FreeElement> kept_rels;
  GroebnerBasis kept_gb = GroebnerBasis::empty(Famb);

  for (int d = elo; d <= ehi + 1; ++d) {
    std::vector<ModTerm> basis = free_basis_of_degree(Famb, d);
    if (basis.empty()) continue;
    // evaluate every ambient basis vector in W_d
    int wd = dual_dim(d);
    std::vector<std::vector<std::int64_t>> T;
    for (const ModTerm& mt : basis) {
      EvalKey key{mt.pos, mt.mono.exponents()};
      auto it = eval.find(key);
      if (it == eval.end()) {
        // factor off the smallest variable present
        int v = 0;
        while (mt.mono.exponent(v) == 0) ++v;
        std::vector<int> rest = mt.mono.exponents();
        rest[v] -= 1;
        auto prev = eval.find(EvalKey{mt.pos, rest});
        if (prev == eval.end())
          throw structural_error("matlis evaluation bookkeeping failed");
        std::vector<std::int64_t> img(wd, 0);
        const auto& m = act[d - 1 - elo][v];
        for (int i = 0; i < wd; ++i) {
          std::int64_t s = 0;
          for (size_t j = 0; j < prev->second.size(); ++j)
            s = fp_add(s, fp_mul(m[i][j], prev->second[j], p), p);
          img[i] = s;
        }
        it = eval.emplace(key, std::move(img)).first;
      }
      T.push_back(it->second);
    }
    // kernel of F'_d -> W_d gives the relation slice
    Rref rr(static_cast<int>(basis.size()), p);
    std::vector<std::vector<std::int64_t>> rows(
        wd, std::vector<std::int64_t>(basis.size(), 0));
    for (size_t c = 0; c < basis.size(); ++c)
      for (int i = 0; i < wd; ++i) rows[i][c] = T[c][i];
    for (auto& row : rows) rr.insert(std::move(row));
    // kernel vectors as free elements; keep those not already generated
    for (const auto& kv : rr.kernel_basis()) {
      std::vector<Polynomial> comps(Famb.rank(), Polynomial::zero(ring));
      for (size_t c = 0; c < basis.size(); ++c) {
        if (kv[c] == 0) continue;
        comps[basis[c].pos] = poly_add(
            comps[basis[c].pos],
            Polynomial::monomial(ring, kv[c], basis[c].mono));
      }
      FreeElement rel(Famb, std::move(comps));
      if (rel.is_zero()) continue;
      if (!kept_rels.empty() && kept_gb.contains(rel)) continue;
      kept_rels.push_back(rel);
      kept_gb = GroebnerBasis::compute(Famb, kept_rels);
    }
  }

  return present(Famb, kept_rels);
}

}  // namespace gmod
