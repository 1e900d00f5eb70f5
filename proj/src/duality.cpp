#include "gmod/duality.hpp"

#include <functional>
#include <random>

namespace gmod {

ArtinianRep F1(const FPModule& M) { return ArtinianRep(M); }

ArtinianRep F2(const FPModule& M) {
  if (M.is_zero())
    throw structural_error("F2 undefined for the zero module");
  const int n = M.ring()->nvars();
  const int d = krull_dim(M);
  return ArtinianRep(ext_module(n - d, M, -n));
}

FPModule G1(const ArtinianRep& X) { return X.dual(); }

FPModule G2(const ArtinianRep& X) {
  if (X.is_zero()) throw structural_error("G2 undefined for the zero module");
  const FPModule& N = X.dual();
  const int n = N.ring()->nvars();
  const int d = krull_dim(N);
  return ext_module(n - d, N, -n);
}

int ndim(const ArtinianRep& X) { return krull_dim(X.dual()); }

int width(const ArtinianRep& X) {
  if (X.is_zero()) throw structural_error("width undefined for the zero module");
  return depth(X.dual());
}

bool is_co_cm(const ArtinianRep& X) {
  if (X.is_zero())
    throw structural_error("co-Cohen-Macaulayness undefined for the zero module");
  return width(X) == ndim(X);
}

FPModule quotient_by_elements(const FPModule& M,
                              const std::vector<Polynomial>& xs) {
  std::vector<FreeElement> rels = M.relations();
  for (const Polynomial& f : xs) {
    if (f.is_zero()) continue;
    for (int i = 0; i < M.ambient().rank(); ++i) {
      std::vector<Polynomial> comps(M.ambient().rank(),
                                    Polynomial::zero(M.ring()));
      comps[i] = f;
      rels.emplace_back(M.ambient(), std::move(comps));
    }
  }
  return present(M.ambient(), std::move(rels));
}

namespace {

/// Multiplication by a homogeneous element as a map M(-deg f) -> M.
ModuleMap multiplication_map(const FPModule& M, const Polynomial& f) {
  int e = f.is_zero() ? 0 : *f.degree();
  FPModule shifted = twist_module(M, e);
  std::vector<std::vector<Polynomial>> m(
      M.ambient().rank(),
      std::vector<Polynomial>(M.ambient().rank(), Polynomial::zero(M.ring())));
  for (int i = 0; i < M.ambient().rank(); ++i) m[i][i] = f;
  return ModuleMap(shifted, M,
                   FreeMap(shifted.ambient(), M.ambient(), std::move(m)));
}

}  // namespace

bool is_coregular(const std::vector<Polynomial>& xs, const ArtinianRep& X) {
  FPModule cur = X.dual();
  for (const Polynomial& f : xs) {
    if (cur.is_zero()) return true;  // everything is regular on 0
    if (f.is_zero()) return false;
    if (*f.degree() == 0) return false;  // units are not in the maximal ideal
    if (!kernel(multiplication_map(cur, f)).module.is_zero()) return false;
    cur = cokernel(multiplication_map(cur, f));
  }
  return true;
}

SopCheck validate_sop(const SOP& sop, const FPModule& M) {
  SopCheck out;
  if (M.is_zero()) {
    out.valid = sop.elements.empty() && sop.target_dim == 0;
    out.quotient_dim = -1;
    out.colength = 0;
    return out;
  }
  const int d = krull_dim(M);
  FPModule Q = quotient_by_elements(M, sop.elements);
  out.quotient_dim = krull_dim(Q);
  bool finite = out.quotient_dim <= 0;
  out.valid = finite && static_cast<int>(sop.elements.size()) == d &&
              sop.target_dim == d;
  if (finite) {
    DegreeWindow w = finite_support_window(Q);
    int len = 0;
    for (int deg = w.lo; deg <= w.hi; ++deg) len += hilbert_function(Q, deg);
    out.colength = len;
  }
  return out;
}

LocalHomologyResult local_homology_top(const SOP& xs, const ArtinianRep& X) {
  if (X.is_zero())
    throw structural_error("local homology of the zero module is zero; use a nonzero representation");
  const FPModule& N = X.dual();
  SopCheck chk = validate_sop(xs, N);
  if (!chk.valid)
    throw error(
        "local homology hypothesis violated: 0:_X(xs) has infinite length");
  const int n = N.ring()->nvars();
  const int d = krull_dim(N);
  LocalHomologyResult out;
  out.d = d;
  out.colength = chk.colength;
  out.module = ext_module(n - d, N, -n);
  return out;
}

ArtinianRep koszul_homology_artinian(const std::vector<Polynomial>& xs, int t,
                                     int i, const ArtinianRep& X) {
  if (t < 1) throw structural_error("Koszul stage must be >= 1");
  std::vector<Polynomial> powered;
  powered.reserve(xs.size());
  for (const Polynomial& f : xs) {
    Polynomial acc = f;
    for (int k = 1; k < t; ++k) acc = poly_mul(acc, f);
    powered.push_back(std::move(acc));
  }
  return ArtinianRep(koszul_cochain_cohomology(powered, X.dual(), i));
}

SOP find_sop(const FPModule& M, const SopSearchOptions& opts) {
  if (M.is_zero()) throw structural_error("find_sop undefined for the zero module");
  const RingPtr& ring = M.ring();
  const int n = ring->nvars();
  const int d = krull_dim(M);
  SOP sop;
  sop.target_dim = d;
  if (d <= 0) return sop;  // empty sequence

  auto try_candidate = [&](std::vector<Polynomial> cand) -> bool {
    FPModule Q = quotient_by_elements(M, cand);
    if (krull_dim(Q) > 0) return false;
    sop.elements = std::move(cand);
    return true;
  };

  // subsets of the variables first, in lexicographic order
  std::vector<int> idx(d);
  std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
    if (pos == d) {
      std::vector<Polynomial> cand;
      for (int k = 0; k < d; ++k)
        cand.push_back(Polynomial::variable(ring, idx[k]));
      return try_candidate(std::move(cand));
    }
    for (int v = start; v < n; ++v) {
      idx[pos] = v;
      if (rec(pos + 1, v + 1)) return true;
    }
    return false;
  };
  if (rec(0, 0)) return sop;

  // seeded random linear combinations
  std::mt19937_64 rng(opts.seed);
  const std::int64_t p = ring->characteristic();
  for (int round = 0; round < opts.random_rounds; ++round) {
    std::vector<Polynomial> cand;
    for (int k = 0; k < d; ++k) {
      Polynomial f = Polynomial::zero(ring);
      bool nonzero = false;
      while (!nonzero) {
        std::vector<std::pair<std::int64_t, Monomial>> raw;
        for (int v = 0; v < n; ++v) {
          std::int64_t c = static_cast<std::int64_t>(rng() % p);
          if (c != 0) {
            raw.emplace_back(c, Monomial::variable(n, v));
            nonzero = true;
          }
        }
        if (nonzero) f = poly_normalize(ring, std::move(raw));
      }
      cand.push_back(std::move(f));
    }
    if (try_candidate(std::move(cand))) return sop;
  }
  throw error("system-of-parameters search budget exhausted");
}

}  // namespace gmod
