#include "gmod/fp_module.hpp"

#include <algorithm>
#include <random>

#include "gmod/slice.hpp"

namespace gmod {

FreeMap FPModule::relation_map() const {
  if (rels_.empty()) {
    FreeModule src(ambient_.ring(), {});
    return FreeMap(src, ambient_,
                   std::vector<std::vector<Polynomial>>(ambient_.rank()));
  }
  return FreeMap::from_columns(ambient_, rels_);
}

FPModule present_no_minimize(const FreeModule& F, std::vector<FreeElement> rels) {
  FPModule out;
  out.ambient_ = F;
  out.rel_gb_ = GroebnerBasis::compute(F, rels);
  out.rels_ = out.rel_gb_.elements();
  return out;
}

FPModule present(const FreeModule& F, std::vector<FreeElement> rels) {
  return minimalize(present_no_minimize(F, std::move(rels)));
}

FPModule present(const FreeModule& F, const FreeMap& rel) {
  if (!(rel.target() == F))
    throw structural_error("relation map does not target the stated module");
  std::vector<FreeElement> cols;
  for (int j = 0; j < rel.source().rank(); ++j) {
    FreeElement c = rel.column(j);
    if (!c.is_zero()) cols.push_back(std::move(c));
  }
  return present(F, std::move(cols));
}

FPModule zero_module(const RingPtr& ring) {
  return present_no_minimize(FreeModule(ring, {}), {});
}

FPModule free_as_module(const FreeModule& F) {
  return present_no_minimize(F, {});
}

FPModule quotient_ring_module(const RingPtr& ring,
                              const std::vector<Polynomial>& ideal_gens) {
  FreeModule F(ring, {0});
  std::vector<FreeElement> rels;
  for (const Polynomial& f : ideal_gens)
    if (!f.is_zero()) rels.emplace_back(F, std::vector<Polynomial>{f});
  return present(F, std::move(rels));
}

FPModule twist_module(const FPModule& M, int shift) {
  std::vector<int> tw = M.ambient().twists();
  for (int& t : tw) t += shift;
  FreeModule F(M.ring(), std::move(tw));
  std::vector<FreeElement> rels;
  rels.reserve(M.relations().size());
  for (const FreeElement& g : M.relations())
    rels.emplace_back(F, g.components());
  // twisting preserves both the Groebner and minimality invariants
  FPModule out = present_no_minimize(F, std::move(rels));
  return out;
}

Minimalized minimalize_tracked(const FPModule& M) {
  FreeModule ambient = M.ambient();
  std::vector<FreeElement> rels = M.relations();
  std::vector<int> survivors(ambient.rank());
  for (int i = 0; i < ambient.rank(); ++i) survivors[i] = i;
  const RingPtr& ring = M.ring();
  const std::int64_t p = ring ? ring->characteristic() : 2;

  while (true) {
    int unit_row = -1, unit_col = -1;
    for (size_t j = 0; j < rels.size() && unit_row < 0; ++j)
      for (int i = 0; i < ambient.rank(); ++i) {
        const Polynomial& e = rels[j].component(i);
        if (!e.is_zero() && e.is_constant()) {
          unit_row = i;
          unit_col = static_cast<int>(j);
          break;
        }
      }
    if (unit_row < 0) break;

    const Polynomial pivot_entry = rels[unit_col].component(unit_row);
    std::int64_t inv = fp_inv(pivot_entry.leading_term().coeff, p);
    std::vector<FreeElement> next;
    next.reserve(rels.size() - 1);
    for (size_t j = 0; j < rels.size(); ++j) {
      if (static_cast<int>(j) == unit_col) continue;
      const Polynomial& c = rels[j].component(unit_row);
      FreeElement g = rels[j];
      if (!c.is_zero()) {
        Polynomial q = poly_scale(c, inv);
        g = element_sub(g, element_mul_poly(rels[unit_col], q));
      }
      next.push_back(std::move(g));
    }
    // drop generator unit_row
    std::vector<int> tw;
    for (int i = 0; i < ambient.rank(); ++i)
      if (i != unit_row) tw.push_back(ambient.twist(i));
    FreeModule smaller(ring, tw);
    survivors.erase(survivors.begin() + unit_row);
    std::vector<FreeElement> stripped;
    for (FreeElement& g : next) {
      std::vector<Polynomial> comps;
      for (int i = 0; i < ambient.rank(); ++i)
        if (i != unit_row) comps.push_back(g.component(i));
      FreeElement s(smaller, std::move(comps));
      if (!s.is_zero()) stripped.push_back(std::move(s));
    }
    ambient = smaller;
    rels = GroebnerBasis::compute(ambient, stripped).elements();
  }

  Minimalized out;
  out.module = present_no_minimize(ambient, rels);
  out.surviving_generators = std::move(survivors);
  return out;
}

FPModule minimalize(const FPModule& M) { return minimalize_tracked(M).module; }

ModuleMap::ModuleMap(FPModule source, FPModule target, FreeMap lift)
    : source_(std::move(source)), target_(std::move(target)), lift_(std::move(lift)) {
  if (!(lift_.source() == source_.ambient()) ||
      !(lift_.target() == target_.ambient()))
    throw structural_error("lift does not match the module ambients");
  for (const FreeElement& r : source_.relations())
    if (!target_.relation_basis().contains(lift_.apply(r)))
      throw structural_error(
          "map is not well-defined: a source relation escapes the target "
          "relations");
}

ModuleMap ModuleMap::identity(const FPModule& M) {
  return ModuleMap(M, M, FreeMap::identity(M.ambient()));
}

bool ModuleMap::is_zero_map() const {
  for (int j = 0; j < lift_.source().rank(); ++j)
    if (!target_.relation_basis().contains(lift_.column(j))) return false;
  return true;
}

ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.target() == g.source()))
    throw structural_error("module map composition mismatch");
  return ModuleMap(f.source(), g.target(), map_compose(g.lift(), f.lift()));
}

namespace {

/// Columns of `first` then `second` as one map into `target`.
FreeMap stack_columns(const FreeModule& target,
                      const std::vector<FreeElement>& first,
                      const std::vector<int>& first_degrees,
                      const std::vector<FreeElement>& second,
                      const std::vector<int>& second_degrees) {
  std::vector<int> tw = first_degrees;
  tw.insert(tw.end(), second_degrees.begin(), second_degrees.end());
  FreeModule src(target.ring(), tw);
  std::vector<std::vector<Polynomial>> m(
      target.rank(),
      std::vector<Polynomial>(tw.size(), Polynomial::zero(target.ring())));
  for (size_t j = 0; j < first.size(); ++j)
    for (int i = 0; i < target.rank(); ++i) m[i][j] = first[j].component(i);
  for (size_t j = 0; j < second.size(); ++j)
    for (int i = 0; i < target.rank(); ++i)
      m[i][first.size() + j] = second[j].component(i);
  return FreeMap(src, target, std::move(m));
}

std::vector<int> element_degrees(const std::vector<FreeElement>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (const FreeElement& e : v) out.push_back(*e.degree());
  return out;
}

/// First-block parts of the syzygies of [block | tail]: generators of the
/// submodule {w : block * w lands in <tail>}.
std::vector<FreeElement> block_syzygy_parts(
    const FreeModule& parent, const std::vector<FreeElement>& block,
    const std::vector<int>& block_degrees, const std::vector<FreeElement>& tail,
    const std::vector<int>& tail_degrees, const FreeModule& block_coeff) {
  std::vector<FreeElement> cols = block;
  cols.insert(cols.end(), tail.begin(), tail.end());
  std::vector<int> degs = block_degrees;
  degs.insert(degs.end(), tail_degrees.begin(), tail_degrees.end());
  SyzygyResult syz = syzygies_with_degrees(parent, cols, degs);
  std::vector<FreeElement> out;
  for (const FreeElement& s : syz.generators) {
    std::vector<Polynomial> comps(s.components().begin(),
                                  s.components().begin() + block.size());
    FreeElement a(block_coeff, std::move(comps));
    if (!a.is_zero()) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

KernelResult kernel(const ModuleMap& f) {
  const FreeModule& Fsrc = f.source().ambient();
  const FreeModule& Ftgt = f.target().ambient();

  // preimage of the target relations: U = { v : lift(v) in <target rels> }
  std::vector<FreeElement> lift_cols = f.lift().columns();
  std::vector<FreeElement> A = block_syzygy_parts(
      Ftgt, lift_cols, Fsrc.twists(), f.target().relations(),
      element_degrees(f.target().relations()), Fsrc);
  A = minimal_generators(Fsrc, std::move(A));

  FreeModule EA(Fsrc.ring(), element_degrees(A));
  // relations of U / <source rels>
  std::vector<FreeElement> relsK = block_syzygy_parts(
      Fsrc, A, EA.twists(), f.source().relations(),
      element_degrees(f.source().relations()), EA);

  Minimalized K = minimalize_tracked(present_no_minimize(EA, relsK));

  std::vector<FreeElement> incl_cols;
  for (int j : K.surviving_generators) incl_cols.push_back(A[j]);
  FreeMap incl = incl_cols.empty()
                     ? FreeMap(FreeModule(Fsrc.ring(), {}), Fsrc,
                               std::vector<std::vector<Polynomial>>(Fsrc.rank()))
                     : FreeMap::from_columns(Fsrc, incl_cols);
  return KernelResult{K.module, ModuleMap(K.module, f.source(), incl)};
}

FPModule cokernel(const ModuleMap& f) {
  std::vector<FreeElement> rels = f.target().relations();
  for (int j = 0; j < f.lift().source().rank(); ++j) {
    FreeElement c = f.lift().column(j);
    if (!c.is_zero()) rels.push_back(std::move(c));
  }
  return present(f.target().ambient(), std::move(rels));
}

FPModule direct_sum(const FPModule& A, const FPModule& B) {
  require_same_ring(A.ring(), B.ring());
  std::vector<int> tw = A.ambient().twists();
  tw.insert(tw.end(), B.ambient().twists().begin(), B.ambient().twists().end());
  FreeModule F(A.ring(), tw);
  const int ra = A.ambient().rank();
  const int rb = B.ambient().rank();
  std::vector<FreeElement> rels;
  for (const FreeElement& g : A.relations()) {
    std::vector<Polynomial> comps = g.components();
    comps.resize(ra + rb, Polynomial::zero(A.ring()));
    rels.emplace_back(F, std::move(comps));
  }
  for (const FreeElement& g : B.relations()) {
    std::vector<Polynomial> comps(ra, Polynomial::zero(A.ring()));
    comps.insert(comps.end(), g.components().begin(), g.components().end());
    rels.emplace_back(F, std::move(comps));
  }
  return present(F, std::move(rels));
}

FPModule hom_module(const FPModule& A, const FPModule& B) {
  require_same_ring(A.ring(), B.ring());
  const RingPtr& ring = A.ring();
  const std::vector<int>& aT = A.ambient().twists();
  const std::vector<int>& bT = B.ambient().twists();
  const int ra = A.ambient().rank();
  const int rb = B.ambient().rank();
  const int sa = static_cast<int>(A.relations().size());

  // Hom(F_A, B) = sum_i B(a_i), Hom(rel-cover of A, B) = sum_j B(g_j)
  std::vector<int> src_tw, tgt_tw;
  for (int i = 0; i < ra; ++i)
    for (int k = 0; k < rb; ++k) src_tw.push_back(bT[k] - aT[i]);
  std::vector<int> rel_deg = element_degrees(A.relations());
  for (int j = 0; j < sa; ++j)
    for (int k = 0; k < rb; ++k) tgt_tw.push_back(bT[k] - rel_deg[j]);

  FreeModule Fsrc(ring, src_tw), Ftgt(ring, tgt_tw);

  auto block_rels = [&](const FreeModule& F, int blocks) {
    std::vector<FreeElement> rels;
    for (int blk = 0; blk < blocks; ++blk)
      for (const FreeElement& g : B.relations()) {
        std::vector<Polynomial> comps(F.rank(), Polynomial::zero(ring));
        for (int k = 0; k < rb; ++k) comps[blk * rb + k] = g.component(k);
        rels.emplace_back(F, std::move(comps));
      }
    return rels;
  };

  FPModule Smod = present_no_minimize(Fsrc, block_rels(Fsrc, ra));
  FPModule Tmod = present_no_minimize(Ftgt, block_rels(Ftgt, sa));

  std::vector<std::vector<Polynomial>> lift(
      Ftgt.rank(), std::vector<Polynomial>(Fsrc.rank(), Polynomial::zero(ring)));
  for (int j = 0; j < sa; ++j)
    for (int i = 0; i < ra; ++i) {
      const Polynomial& e = A.relations()[j].component(i);
      if (e.is_zero()) continue;
      for (int k = 0; k < rb; ++k) lift[j * rb + k][i * rb + k] = e;
    }
  ModuleMap precompose(Smod, Tmod, FreeMap(Fsrc, Ftgt, std::move(lift)));
  return kernel(precompose).module;
}

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens) {
  FreeModule F1(ring, {0});
  std::vector<FreeElement> elems;
  for (Polynomial& f : gens)
    if (!f.is_zero()) elems.emplace_back(F1, std::vector<Polynomial>{std::move(f)});
  GroebnerBasis gb = GroebnerBasis::compute(F1, elems);
  Ideal out{ring, {}};
  for (const FreeElement& g : gb.elements()) out.groebner.push_back(g.component(0));
  return out;
}

namespace {

bool ideal_is_unit(const Ideal& I) {
  return I.groebner.size() == 1 && I.groebner[0].is_constant();
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring, b.ring);
  if (ideal_is_unit(a)) return b;
  if (ideal_is_unit(b)) return a;
  if (a.is_zero() || b.is_zero()) return make_ideal(a.ring, {});
  FreeModule F1(a.ring, {0});
  std::vector<FreeElement> acols, bcols;
  for (const Polynomial& f : a.groebner)
    acols.emplace_back(F1, std::vector<Polynomial>{f});
  for (const Polynomial& f : b.groebner)
    bcols.emplace_back(F1, std::vector<Polynomial>{f});
  FreeModule EA(a.ring, element_degrees(acols));
  std::vector<FreeElement> parts = block_syzygy_parts(
      F1, acols, element_degrees(acols), bcols, element_degrees(bcols), EA);
  std::vector<Polynomial> gens;
  for (const FreeElement& w : parts) {
    Polynomial acc = Polynomial::zero(a.ring);
    for (size_t j = 0; j < acols.size(); ++j)
      acc = poly_add(acc, poly_mul(w.component(static_cast<int>(j)),
                                   a.groebner[j]));
    if (!acc.is_zero()) gens.push_back(std::move(acc));
  }
  return make_ideal(a.ring, std::move(gens));
}

Ideal annihilator(const FPModule& M) {
  const RingPtr& ring = M.ring();
  if (M.is_zero()) return make_ideal(ring, {Polynomial::constant(ring, 1)});
  FreeModule F1(ring, {0});
  Ideal acc = make_ideal(ring, {Polynomial::constant(ring, 1)});
  for (int i = 0; i < M.ambient().rank(); ++i) {
    // (relations : e_i)
    std::vector<FreeElement> v{element_unit(M.ambient(), i)};
    // shift the coefficient line so the quotient ideal lives in degree 0
    FreeModule Ei(ring, {M.ambient().twist(i)});
    std::vector<FreeElement> parts = block_syzygy_parts(
        M.ambient(), v, {M.ambient().twist(i)}, M.relations(),
        element_degrees(M.relations()), Ei);
    std::vector<Polynomial> qgens;
    for (const FreeElement& w : parts)
      if (!w.component(0).is_zero()) qgens.push_back(w.component(0));
    acc = ideal_intersect(acc, make_ideal(ring, std::move(qgens)));
  }
  return acc;
}

int hilbert_function(const FPModule& M, int d) {
  if (M.is_zero()) return 0;
  return GradedSlice(M, d).dim();
}

// ---- isomorphism testing ----

std::vector<FreeMap> hom_degree_zero_basis(const FPModule& A, const FPModule& B) {
  require_same_ring(A.ring(), B.ring());
  const RingPtr& ring = A.ring();
  const std::int64_t p = ring->characteristic();
  const int ra = A.ambient().rank();
  const int rb = B.ambient().rank();

  struct Unknown {
    int i, l;          // A generator, B generator
    Monomial m;        // monomial of degree aT[i] - bT[l]
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < ra; ++i)
    for (int l = 0; l < rb; ++l)
      for (Monomial& m : monomials_of_degree(
               ring, A.ambient().twist(i) - B.ambient().twist(l)))
        unknowns.push_back(Unknown{i, l, std::move(m)});
  if (unknowns.empty()) return {};

  // constraint rows: coordinates of NF_B(phi_u(r_j)) for every relation r_j
  std::vector<std::vector<std::int64_t>> columns(
      unknowns.size());  // per unknown, concatenated constraint coordinates
  size_t total_rows = 0;
  for (const FreeElement& r : A.relations()) {
    int dr = *r.degree();
    std::vector<ModTerm> basis = free_basis_of_degree(B.ambient(), dr);
    std::map<std::pair<int, std::vector<int>>, int> col_of;
    for (size_t c = 0; c < basis.size(); ++c)
      col_of.emplace(
          std::make_pair(basis[c].pos, basis[c].mono.exponents()),
          static_cast<int>(c));
    for (size_t u = 0; u < unknowns.size(); ++u) {
      const Unknown& un = unknowns[u];
      const Polynomial& ri = r.component(un.i);
      std::vector<std::int64_t> coords(basis.size(), 0);
      if (!ri.is_zero()) {
        std::vector<Polynomial> comps(rb, Polynomial::zero(ring));
        comps[un.l] = poly_mul_term(ri, 1, un.m);
        FreeElement img(B.ambient(), std::move(comps));
        FreeElement nf = B.relation_basis().normal_form(img);
        for (int k = 0; k < rb; ++k)
          for (const Term& t : nf.component(k).terms())
            coords[col_of.at(std::make_pair(k, t.mono.exponents()))] = t.coeff;
      }
      columns[u].insert(columns[u].end(), coords.begin(), coords.end());
    }
    total_rows += basis.size();
  }

  std::vector<std::vector<std::int64_t>> coeff_basis;
  if (total_rows == 0) {
    // no constraints: every unknown is free
    for (size_t u = 0; u < unknowns.size(); ++u) {
      std::vector<std::int64_t> v(unknowns.size(), 0);
      v[u] = 1;
      coeff_basis.push_back(std::move(v));
    }
  } else {
    Rref rr(static_cast<int>(unknowns.size()), p);
    for (size_t row = 0; row < total_rows; ++row) {
      std::vector<std::int64_t> r(unknowns.size());
      for (size_t u = 0; u < unknowns.size(); ++u) r[u] = columns[u][row];
      rr.insert(std::move(r));
    }
    coeff_basis = rr.kernel_basis();
  }

  std::vector<FreeMap> out;
  for (const auto& cv : coeff_basis) {
    std::vector<std::vector<Polynomial>> m(
        rb, std::vector<Polynomial>(ra, Polynomial::zero(ring)));
    for (size_t u = 0; u < unknowns.size(); ++u) {
      if (cv[u] == 0) continue;
      const Unknown& un = unknowns[u];
      m[un.l][un.i] = poly_add(
          m[un.l][un.i], Polynomial::monomial(ring, cv[u], un.m));
    }
    out.emplace_back(A.ambient(), B.ambient(), std::move(m));
  }
  return out;
}

namespace {

FreeMap combine_maps(const std::vector<FreeMap>& basis,
                     const std::vector<std::int64_t>& coeffs,
                     const FreeModule& src, const FreeModule& tgt) {
  const RingPtr& ring = src.ring();
  std::vector<std::vector<Polynomial>> m(
      tgt.rank(), std::vector<Polynomial>(src.rank(), Polynomial::zero(ring)));
  for (size_t u = 0; u < basis.size(); ++u) {
    if (coeffs[u] == 0) continue;
    for (int i = 0; i < tgt.rank(); ++i)
      for (int j = 0; j < src.rank(); ++j)
        m[i][j] = poly_add(m[i][j], poly_scale(basis[u].entry(i, j), coeffs[u]));
  }
  return FreeMap(src, tgt, std::move(m));
}

/// NF coordinates of (map applied to each source generator minus the
/// corresponding identity column), used for "composite == identity" checks.
bool composite_is_identity(const FPModule& M, const FreeMap& composite) {
  for (int i = 0; i < M.ambient().rank(); ++i) {
    FreeElement diff = element_sub(composite.column(i),
                                   element_unit(M.ambient(), i));
    if (!M.relation_basis().contains(diff)) return false;
  }
  return true;
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

IsoResult is_isomorphic(const FPModule& A, const FPModule& B,
                        const IsoOptions& opts) {
  require_same_ring(A.ring(), B.ring());
  if (A.is_zero() && B.is_zero()) return {IsoAnswer::yes, "both modules are zero"};

  // certified obstructions
  auto window_hi = [](const FPModule& M) {
    int hi = 0;
    for (int t : M.ambient().twists()) hi = std::max(hi, t);
    for (const FreeElement& g : M.relations()) hi = std::max(hi, *g.degree());
    return hi;
  };
  auto window_lo = [](const FPModule& M) {
    int lo = 0;
    for (int t : M.ambient().twists()) lo = std::min(lo, t);
    return lo;
  };
  int lo = std::min(window_lo(A), window_lo(B));
  int hi = std::max(window_hi(A), window_hi(B)) + opts.degree_window;
  for (int d = lo; d <= hi; ++d)
    if (hilbert_function(A, d) != hilbert_function(B, d))
      return {IsoAnswer::no,
              "Hilbert functions differ in degree " + std::to_string(d)};

  if (sorted_copy(A.ambient().twists()) != sorted_copy(B.ambient().twists()))
    return {IsoAnswer::no, "minimal generator twists differ"};

  auto rel_degrees = [](const FPModule& M) {
    std::vector<FreeElement> min =
        minimal_generators(M.ambient(), M.relations());
    std::vector<int> ds;
    for (const FreeElement& g : min) ds.push_back(*g.degree());
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  if (rel_degrees(A) != rel_degrees(B))
    return {IsoAnswer::no, "minimal relation degrees differ"};

  if (!(annihilator(A) == annihilator(B)))
    return {IsoAnswer::no, "annihilators differ"};

  // search for an explicit inverse pair in the degree-0 hom spaces
  std::vector<FreeMap> VAB = hom_degree_zero_basis(A, B);
  std::vector<FreeMap> VBA = hom_degree_zero_basis(B, A);
  if (VAB.empty() || VBA.empty()) return {IsoAnswer::unknown, "no degree-0 homs found"};

  const std::int64_t p = A.ring()->characteristic();
  std::mt19937_64 rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    std::vector<std::int64_t> c(VAB.size());
    if (trial == 0) {
      std::fill(c.begin(), c.end(), 1);
    } else {
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % p);
    }
    FreeMap phi = combine_maps(VAB, c, A.ambient(), B.ambient());
    ModuleMap f(A, B, phi);
    if (!cokernel(f).is_zero()) continue;

    // solve psi*phi = id_A over the VBA coordinates
    size_t nun = VBA.size();
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> rhs_all;
    for (int i = 0; i < A.ambient().rank(); ++i) {
      FreeElement target = element_unit(A.ambient(), i);
      FreeElement target_nf = A.relation_basis().normal_form(target);
      int di = A.ambient().twist(i);
      std::vector<ModTerm> basis = free_basis_of_degree(A.ambient(), di);
      std::map<std::pair<int, std::vector<int>>, int> col_of;
      for (size_t cidx = 0; cidx < basis.size(); ++cidx)
        col_of.emplace(
            std::make_pair(basis[cidx].pos, basis[cidx].mono.exponents()),
            static_cast<int>(cidx));
      auto coords_of = [&](const FreeElement& v) {
        std::vector<std::int64_t> out(basis.size(), 0);
        for (int k = 0; k < A.ambient().rank(); ++k)
          for (const Term& t : v.component(k).terms())
            out[col_of.at(std::make_pair(k, t.mono.exponents()))] = t.coeff;
        return out;
      };
      std::vector<std::vector<std::int64_t>> per_unknown;
      for (size_t u = 0; u < nun; ++u) {
        FreeElement img = VBA[u].apply(phi.column(i));
        per_unknown.push_back(coords_of(A.relation_basis().normal_form(img)));
      }
      std::vector<std::int64_t> rhs = coords_of(target_nf);
      for (size_t row = 0; row < basis.size(); ++row) {
        std::vector<std::int64_t> r(nun);
        for (size_t u = 0; u < nun; ++u) r[u] = per_unknown[u][row];
        rows.push_back(std::move(r));
        rhs_all.push_back(rhs[row]);
      }
    }
    // augmented elimination
    Rref rr(static_cast<int>(nun) + 1, p);
    for (size_t r = 0; r < rows.size(); ++r) {
      std::vector<std::int64_t> aug = rows[r];
      aug.push_back(rhs_all[r]);
      rr.insert(std::move(aug));
    }
    bool inconsistent = rr.is_pivot(static_cast<int>(nun));
    if (inconsistent) continue;
    std::vector<std::int64_t> d(nun, 0);
    {
      const auto& rws = rr.rows();
      for (size_t r = 0; r < rws.size(); ++r) {
        int pc = -1;
        for (size_t cidx = 0; cidx < nun; ++cidx)
          if (rws[r][cidx] != 0) {
            pc = static_cast<int>(cidx);
            break;
          }
        if (pc >= 0) d[pc] = rws[r][nun];
      }
    }
    FreeMap psi = combine_maps(VBA, d, B.ambient(), A.ambient());
    // re-verify both composites explicitly
    if (!composite_is_identity(A, map_compose(psi, phi))) continue;
    if (!composite_is_identity(B, map_compose(phi, psi))) continue;
    ModuleMap g(B, A, psi);  // well-definedness check
    (void)g;
    return {IsoAnswer::yes, "explicit inverse pair found"};
  }
  return {IsoAnswer::unknown, "no inverse found within the trial budget"};
}

}  // namespace gmod
