#include "gmod/complex.hpp"

#include <algorithm>
#include <functional>

namespace gmod {

namespace {

std::vector<int> degrees_of(const std::vector<FreeElement>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (const FreeElement& e : v) out.push_back(*e.degree());
  return out;
}

}  // namespace

Complex::Complex(std::vector<FPModule> terms, std::vector<ModuleMap> maps,
                 std::optional<ModuleMap> augmentation)
    : terms_(std::move(terms)), maps_(std::move(maps)),
      augmentation_(std::move(augmentation)) {
  if (terms_.size() != maps_.size() + 1)
    throw structural_error("complex needs one more term than maps");
  for (size_t i = 0; i < maps_.size(); ++i) {
    if (!(maps_[i].source() == terms_[i + 1]) || !(maps_[i].target() == terms_[i]))
      throw structural_error("complex map endpoints are wrong");
    if (i + 1 < maps_.size()) {
      // d_i * d_{i+1} = 0 as a map of modules
      FreeMap comp = map_compose(maps_[i].lift(), maps_[i + 1].lift());
      for (int j = 0; j < comp.source().rank(); ++j) {
        FreeElement c = comp.column(j);
        if (!terms_[i].relation_basis().contains(c))
          throw structural_error("consecutive composite is not zero");
      }
    }
  }
}

FPModule complex_homology(const Complex& C, int i) {
  if (i < 0 || i > C.length())
    throw structural_error("homology index out of range");
  const FPModule& Ti = C.term(i);
  const bool has_in = i + 1 <= C.length();   // d_{i+1} exists
  const bool has_out = i >= 1;               // d_i exists

  if (!has_out) {
    // H_0 = coker(d_1), or the term itself at the end of the range
    return has_in ? cokernel(C.differential(1)) : Ti;
  }
  if (!has_in) return kernel(C.differential(i)).module;

  const ModuleMap& dout = C.differential(i);
  const ModuleMap& din = C.differential(i + 1);

  // U = preimage of <target relations> under the lift of d_i
  const FreeModule& Fi = Ti.ambient();
  std::vector<FreeElement> stacked = dout.lift().columns();
  std::vector<int> degs = Fi.twists();
  for (const FreeElement& g : dout.target().relations()) {
    stacked.push_back(g);
    degs.push_back(*g.degree());
  }
  SyzygyResult syz = syzygies_with_degrees(dout.target().ambient(), stacked, degs);
  std::vector<FreeElement> A;
  for (const FreeElement& s : syz.generators) {
    std::vector<Polynomial> comps(s.components().begin(),
                                  s.components().begin() + Fi.rank());
    FreeElement a(Fi, std::move(comps));
    if (!a.is_zero()) A.push_back(std::move(a));
  }
  A = minimal_generators(Fi, std::move(A));
  if (A.empty()) return zero_module(Ti.ring());

  FreeModule EA(Fi.ring(), degrees_of(A));
  SubmoduleSolver solver(Fi, A);
  std::vector<FreeElement> rels;
  // images of d_{i+1} and the term's own relations, in A-coordinates
  for (int j = 0; j < din.lift().source().rank(); ++j)
    rels.push_back(solver.coordinates(din.lift().column(j)));
  for (const FreeElement& g : Ti.relations())
    rels.push_back(solver.coordinates(g));
  // syzygies among the A's
  for (FreeElement& s : syzygies(Fi, A).generators) rels.push_back(std::move(s));
  return present(EA, std::move(rels));
}

Complex free_resolution(const FPModule& M, int max_length) {
  if (max_length < 0) throw structural_error("resolution length must be >= 0");
  const RingPtr& ring = M.ring();

  std::vector<FPModule> terms;
  std::vector<ModuleMap> maps;
  terms.push_back(free_as_module(M.ambient()));
  std::optional<ModuleMap> aug =
      ModuleMap(terms[0], M, FreeMap::identity(M.ambient()));

  std::vector<FreeElement> current =
      minimal_generators(M.ambient(), M.relations());
  FreeModule Fprev = M.ambient();
  int step = 0;
  while (!current.empty() && step < max_length) {
    FreeModule Fi(ring, degrees_of(current));
    FPModule free_term = free_as_module(Fi);
    FreeMap d = FreeMap::from_columns(Fprev, current);
    maps.push_back(ModuleMap(free_term, terms.back(), d));
    terms.push_back(free_term);
    SyzygyResult syz = syzygies(Fprev, current);
    current = minimal_generators(Fi, syz.generators);
    // reparent: syzygy coefficients live in a module with equal twists
    for (FreeElement& c : current) c = FreeElement(Fi, c.components());
    Fprev = Fi;
    ++step;
  }
  return Complex(std::move(terms), std::move(maps), std::move(aug));
}

int pd(const FPModule& M) {
  if (M.is_zero()) throw structural_error("pd undefined for the zero module");
  const int n = M.ring()->nvars();
  Complex res = free_resolution(M, n + 1);
  if (res.length() > n)
    throw error("resolution exceeded the global dimension bound");
  return res.length();
}

std::vector<BettiRow> betti_table(const Complex& resolution) {
  std::vector<BettiRow> out;
  for (int i = 0; i <= resolution.length(); ++i) {
    BettiRow row;
    row.index = i;
    row.twists = resolution.term(i).ambient().twists();
    std::sort(row.twists.begin(), row.twists.end());
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int r, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic enumeration of index subsets
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

int subset_degree(const std::vector<int>& T, const std::vector<int>& xdeg) {
  int d = 0;
  for (int j : T) d += xdeg[j];
  return d;
}

int subset_index(const std::vector<std::vector<int>>& all,
                 const std::vector<int>& T) {
  auto it = std::lower_bound(all.begin(), all.end(), T);
  return static_cast<int>(it - all.begin());
}

}  // namespace

Complex koszul_complex(const std::vector<Polynomial>& xs, const FPModule& M,
                       KoszulVariant variant) {
  const RingPtr& ring = M.ring();
  const int r = static_cast<int>(xs.size());
  std::vector<int> xdeg;
  for (const Polynomial& f : xs) {
    if (f.is_zero()) throw structural_error("Koszul element must be nonzero");
    require_same_ring(f.ring(), ring);
    xdeg.push_back(*f.degree());
  }
  const std::vector<int>& bT = M.ambient().twists();
  const int rb = M.ambient().rank();

  // chain terms: T_i = sum over |T|=i of M(-sum_{j in T} deg x_j)
  auto make_term = [&](int i, int sign_of_twist) {
    std::vector<std::vector<int>> subs = subsets_of_size(r, i);
    std::vector<int> tw;
    for (const auto& T : subs) {
      int s = subset_degree(T, xdeg) * sign_of_twist;
      for (int k = 0; k < rb; ++k) tw.push_back(bT[k] + s);
    }
    FreeModule F(ring, tw);
    std::vector<FreeElement> rels;
    for (size_t blk = 0; blk < subs.size(); ++blk)
      for (const FreeElement& g : M.relations()) {
        std::vector<Polynomial> comps(F.rank(), Polynomial::zero(ring));
        for (int k = 0; k < rb; ++k)
          comps[blk * rb + k] = g.component(k);
        rels.emplace_back(F, std::move(comps));
      }
    return present_no_minimize(F, std::move(rels));
  };

  // chain differential d_i in block form: e_T -> sum_t (-1)^{t+1} x_{j_t} e_{T minus j_t}
  auto chain_block_matrix = [&](int i, const FPModule& src, const FPModule& tgt) {
    std::vector<std::vector<int>> from = subsets_of_size(r, i);
    std::vector<std::vector<int>> to = subsets_of_size(r, i - 1);
    std::vector<std::vector<Polynomial>> m(
        tgt.ambient().rank(),
        std::vector<Polynomial>(src.ambient().rank(), Polynomial::zero(ring)));
    for (size_t c = 0; c < from.size(); ++c) {
      const std::vector<int>& T = from[c];
      for (size_t t = 0; t < T.size(); ++t) {
        std::vector<int> S = T;
        S.erase(S.begin() + t);
        int rdx = subset_index(to, S);
        Polynomial entry = (t % 2 == 0) ? xs[T[t]] : poly_neg(xs[T[t]]);
        for (int k = 0; k < rb; ++k)
          m[rdx * rb + k][c * rb + k] = entry;
      }
    }
    return FreeMap(src.ambient(), tgt.ambient(), std::move(m));
  };

  if (variant == KoszulVariant::chain) {
    std::vector<FPModule> terms;
    for (int i = 0; i <= r; ++i) terms.push_back(make_term(i, 1));
    std::vector<ModuleMap> maps;
    for (int i = 1; i <= r; ++i)
      maps.push_back(
          ModuleMap(terms[i], terms[i - 1], chain_block_matrix(i, terms[i], terms[i - 1])));
    return Complex(std::move(terms), std::move(maps));
  }

  // cochain: U^i = Hom(Lambda^i, M) with the transposed differentials,
  // stored in chain indexing term(j) = U^{r-j}
  std::vector<FPModule> coterms(r + 1);
  for (int i = 0; i <= r; ++i) coterms[i] = make_term(i, -1);
  std::vector<FPModule> terms;
  for (int j = 0; j <= r; ++j) terms.push_back(coterms[r - j]);
  std::vector<ModuleMap> maps;
  for (int j = 1; j <= r; ++j) {
    // map term(j) = U^{r-j} -> term(j-1) = U^{r-j+1} is delta^{r-j},
    // the transpose of the chain d_{r-j+1}
    int i = r - j + 1;  // chain index being dualized
    std::vector<std::vector<int>> from = subsets_of_size(r, i);
    std::vector<std::vector<int>> to = subsets_of_size(r, i - 1);
    const FPModule& src = terms[j];       // U^{i-1}
    const FPModule& tgt = terms[j - 1];   // U^{i}
    std::vector<std::vector<Polynomial>> m(
        tgt.ambient().rank(),
        std::vector<Polynomial>(src.ambient().rank(), Polynomial::zero(ring)));
    for (size_t c = 0; c < from.size(); ++c) {
      const std::vector<int>& T = from[c];
      for (size_t t = 0; t < T.size(); ++t) {
        std::vector<int> S = T;
        S.erase(S.begin() + t);
        int rdx = subset_index(to, S);
        Polynomial entry = (t % 2 == 0) ? xs[T[t]] : poly_neg(xs[T[t]]);
        // transposed: row = dual of e_T (in tgt = U^i), col = dual of e_S
        for (int k = 0; k < rb; ++k)
          m[c * rb + k][rdx * rb + k] = entry;
      }
    }
    maps.push_back(ModuleMap(src, tgt, FreeMap(src.ambient(), tgt.ambient(), std::move(m))));
  }
  return Complex(std::move(terms), std::move(maps));
}

FPModule koszul_cochain_cohomology(const std::vector<Polynomial>& xs,
                                   const FPModule& M, int i) {
  const int r = static_cast<int>(xs.size());
  if (i < 0 || i > r) return zero_module(M.ring());
  Complex C = koszul_complex(xs, M, KoszulVariant::cochain);
  return complex_homology(C, r - i);
}

}  // namespace gmod
