#include "gmod/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gmod {

std::strong_ordering mod_term_cmp(const ModTerm& a, const ModTerm& b) {
  if (a.pos != b.pos)
    return a.pos < b.pos ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  return grevlex_cmp(a.mono, b.mono);
}

std::optional<LeadTerm> lead_term(const FreeElement& v) {
  for (int i = 0; i < v.parent().rank(); ++i) {
    const Polynomial& f = v.component(i);
    if (!f.is_zero())
      return LeadTerm{i, f.leading_term().mono, f.leading_term().coeff};
  }
  return std::nullopt;
}

namespace {

FreeElement make_monic(const FreeElement& v) {
  auto lt = lead_term(v);
  if (!lt) return v;
  std::int64_t p = v.parent().ring()->characteristic();
  return element_scale(v, fp_inv(lt->coeff, p));
}

// Subtract a single term from an element (the term is known to occur).
FreeElement strip_term(const FreeElement& v, const LeadTerm& t) {
  std::vector<Polynomial> comps = v.components();
  std::vector<std::pair<std::int64_t, Monomial>> raw;
  for (const Term& term : comps[t.pos].terms())
    if (!(term.mono == t.mono)) raw.emplace_back(term.coeff, term.mono);
  comps[t.pos] = poly_normalize(v.parent().ring(), std::move(raw));
  return FreeElement(v.parent(), std::move(comps));
}

FreeElement add_term(const FreeElement& v, const LeadTerm& t) {
  std::vector<Polynomial> comps = v.components();
  comps[t.pos] = poly_add(comps[t.pos],
                          Polynomial::monomial(v.parent().ring(), t.coeff, t.mono));
  return FreeElement(v.parent(), std::move(comps));
}

/// Full tail reduction against a fixed list; reducer choice is the first
/// element whose lead divides, so the result is deterministic.
FreeElement reduce_full(const FreeElement& v,
                        const std::vector<FreeElement>& basis,
                        const std::vector<LeadTerm>& leads, int skip = -1) {
  const std::int64_t p = v.parent().ring()->characteristic();
  FreeElement h = v;
  FreeElement r = element_zero(v.parent());
  while (true) {
    auto lt = lead_term(h);
    if (!lt) break;
    bool reduced = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (static_cast<int>(k) == skip) continue;
      const LeadTerm& gl = leads[k];
      if (gl.pos != lt->pos || !mono_divides(gl.mono, lt->mono)) continue;
      std::int64_t q = fp_mul(lt->coeff, fp_inv(gl.coeff, p), p);
      Monomial m = mono_div(lt->mono, gl.mono);
      h = element_sub(h, element_mul_term(basis[k], q, m));
      reduced = true;
      break;
    }
    if (!reduced) {
      r = add_term(r, *lt);
      h = strip_term(h, *lt);
    }
  }
  return r;
}

struct Pair {
  int degree;
  long long seq;
  int i, j;
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.seq < b.seq;
  }
};

}  // namespace

GroebnerBasis GroebnerBasis::empty(const FreeModule& parent) {
  GroebnerBasis gb;
  gb.parent_ = parent;
  return gb;
}

GroebnerBasis GroebnerBasis::compute(const FreeModule& parent,
                                     const std::vector<FreeElement>& gens) {
  GroebnerBasis out;
  out.parent_ = parent;

  std::vector<FreeElement> basis;
  std::vector<LeadTerm> leads;
  std::set<Pair, PairOrder> queue;
  std::set<std::pair<int, int>> pending;
  long long seq = 0;

  auto pair_degree = [&](int i, int j) {
    Monomial l = mono_lcm(leads[i].mono, leads[j].mono);
    return l.degree() + parent.twist(leads[i].pos);
  };

  auto add_element = [&](FreeElement g) {
    int t = static_cast<int>(basis.size());
    leads.push_back(*lead_term(g));
    basis.push_back(std::move(g));
    for (int i = 0; i < t; ++i) {
      if (leads[i].pos != leads[t].pos) continue;
      queue.insert(Pair{pair_degree(i, t), seq++, i, t});
      pending.insert({i, t});
    }
  };

  for (const FreeElement& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.parent() == parent))
      throw structural_error("generator does not live in the stated module");
    add_element(make_monic(g));
  }

  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});

    const LeadTerm& li = leads[pr.i];
    const LeadTerm& lj = leads[pr.j];
    // product criterion (sound for ideals)
    if (parent.rank() == 1 && mono_coprime(li.mono, lj.mono)) continue;
    // chain criterion
    Monomial lcm = mono_lcm(li.mono, lj.mono);
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (static_cast<int>(k) == pr.i || static_cast<int>(k) == pr.j) continue;
      if (leads[k].pos != li.pos || !mono_divides(leads[k].mono, lcm)) continue;
      int kk = static_cast<int>(k);
      std::pair<int, int> key_ik{std::min(pr.i, kk), std::max(pr.i, kk)};
      std::pair<int, int> key_jk{std::min(pr.j, kk), std::max(pr.j, kk)};
      if (!pending.count(key_ik) && !pending.count(key_jk)) skip = true;
    }
    if (skip) continue;

    FreeElement s =
        element_sub(element_mul_term(basis[pr.i], 1, mono_div(lcm, li.mono)),
                    element_mul_term(basis[pr.j], 1, mono_div(lcm, lj.mono)));
    FreeElement r = reduce_full(s, basis, leads);
    if (!r.is_zero()) add_element(make_monic(r));
  }

  // interreduce: minimal leads first, then one full-reduction pass
  std::vector<int> order(basis.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto c = mod_term_cmp(ModTerm{leads[a].pos, leads[a].mono},
                          ModTerm{leads[b].pos, leads[b].mono});
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<FreeElement> kept;
  std::vector<LeadTerm> kept_leads;
  for (int idx : order) {
    bool divisible = false;
    for (const LeadTerm& kl : kept_leads)
      if (kl.pos == leads[idx].pos && mono_divides(kl.mono, leads[idx].mono)) {
        divisible = true;
        break;
      }
    if (!divisible) {
      kept.push_back(basis[idx]);
      kept_leads.push_back(leads[idx]);
    }
  }
  for (size_t k = 0; k < kept.size(); ++k)
    kept[k] = make_monic(reduce_full(kept[k], kept, kept_leads,
                                     static_cast<int>(k)));
  std::vector<int> final_order(kept.size());
  for (size_t i = 0; i < kept.size(); ++i) final_order[i] = static_cast<int>(i);
  std::sort(final_order.begin(), final_order.end(), [&](int a, int b) {
    return mod_term_cmp(ModTerm{kept_leads[a].pos, kept_leads[a].mono},
                        ModTerm{kept_leads[b].pos, kept_leads[b].mono}) ==
           std::strong_ordering::greater;
  });
  for (int idx : final_order) out.elems_.push_back(kept[idx]);
  return out;
}

FreeElement GroebnerBasis::normal_form(const FreeElement& v) const {
  if (!(v.parent() == parent_))
    throw structural_error("element does not live in the basis' module");
  std::vector<LeadTerm> leads;
  leads.reserve(elems_.size());
  for (const FreeElement& g : elems_) leads.push_back(*lead_term(g));
  return reduce_full(v, elems_, leads);
}

bool GroebnerBasis::contains(const FreeElement& v) const {
  return normal_form(v).is_zero();
}

namespace {

/// Graph module trick shared by syzygies and coordinate solving: GB of
/// {(g_j, e_j)} in F + E under position-over-term with F-positions dominant.
struct GraphData {
  FreeModule big;
  FreeModule coeff;  // E
  GroebnerBasis gb;
  int ambient_rank;
};

GraphData build_graph(const FreeModule& parent,
                      const std::vector<FreeElement>& gens,
                      const std::vector<int>& gen_degrees) {
  const RingPtr& ring = parent.ring();
  std::vector<int> big_twists = parent.twists();
  big_twists.insert(big_twists.end(), gen_degrees.begin(), gen_degrees.end());
  FreeModule big(ring, big_twists);
  FreeModule coeff(ring, gen_degrees);
  std::vector<FreeElement> gammas;
  gammas.reserve(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    std::vector<Polynomial> comps(big.rank(), Polynomial::zero(ring));
    for (int i = 0; i < parent.rank(); ++i) comps[i] = gens[j].component(i);
    comps[parent.rank() + static_cast<int>(j)] = Polynomial::constant(ring, 1);
    gammas.emplace_back(big, std::move(comps));
  }
  return GraphData{big, coeff, GroebnerBasis::compute(big, gammas),
                   parent.rank()};
}

std::vector<int> degrees_of(const std::vector<FreeElement>& gens) {
  std::vector<int> ds;
  ds.reserve(gens.size());
  for (const FreeElement& g : gens) {
    if (g.is_zero())
      throw structural_error("zero generator has no determined degree");
    ds.push_back(*g.degree());
  }
  return ds;
}

}  // namespace

SyzygyResult syzygies(const FreeModule& parent,
                      const std::vector<FreeElement>& gens) {
  return syzygies_with_degrees(parent, gens, degrees_of(gens));
}

SyzygyResult syzygies_with_degrees(const FreeModule& parent,
                                   const std::vector<FreeElement>& gens,
                                   const std::vector<int>& degrees) {
  if (gens.size() != degrees.size())
    throw structural_error("degree list does not match generator list");
  for (size_t j = 0; j < gens.size(); ++j)
    if (!gens[j].is_zero() && *gens[j].degree() != degrees[j])
      throw structural_error("declared generator degree is wrong");
  GraphData gd = build_graph(parent, gens, degrees);
  SyzygyResult out;
  out.coefficient_module = gd.coeff;
  for (const FreeElement& g : gd.gb.elements()) {
    bool ambient_zero = true;
    for (int i = 0; i < gd.ambient_rank && ambient_zero; ++i)
      if (!g.component(i).is_zero()) ambient_zero = false;
    if (!ambient_zero) continue;
    std::vector<Polynomial> comps(g.components().begin() + gd.ambient_rank,
                                  g.components().end());
    out.generators.emplace_back(gd.coeff, std::move(comps));
  }
  return out;
}

SubmoduleSolver::SubmoduleSolver(const FreeModule& parent,
                                 std::vector<FreeElement> gens)
    : parent_(parent), gens_(std::move(gens)) {
  GraphData gd = build_graph(parent_, gens_, degrees_of(gens_));
  graph_module_ = gd.big;
  coeff_module_ = gd.coeff;
  graph_gb_ = gd.gb;
}

bool SubmoduleSolver::contains(const FreeElement& v) const {
  if (v.is_zero()) return true;
  std::vector<Polynomial> comps = v.components();
  comps.resize(graph_module_.rank(), Polynomial::zero(parent_.ring()));
  FreeElement lifted(graph_module_, std::move(comps));
  FreeElement r = graph_gb_.normal_form(lifted);
  for (int i = 0; i < parent_.rank(); ++i)
    if (!r.component(i).is_zero()) return false;
  return true;
}

FreeElement SubmoduleSolver::coordinates(const FreeElement& v) const {
  if (v.is_zero()) return element_zero(coeff_module_);
  std::vector<Polynomial> comps = v.components();
  comps.resize(graph_module_.rank(), Polynomial::zero(parent_.ring()));
  FreeElement lifted(graph_module_, std::move(comps));
  FreeElement r = graph_gb_.normal_form(lifted);
  std::vector<Polynomial> w;
  for (int i = 0; i < parent_.rank(); ++i)
    if (!r.component(i).is_zero())
      throw structural_error("element is not a member of the submodule");
  for (int j = parent_.rank(); j < graph_module_.rank(); ++j)
    w.push_back(poly_neg(r.component(j)));
  return FreeElement(coeff_module_, std::move(w));
}

std::vector<FreeElement> minimal_generators(const FreeModule& parent,
                                            std::vector<FreeElement> gens) {
  std::vector<FreeElement> nonzero;
  for (FreeElement& g : gens)
    if (!g.is_zero()) nonzero.push_back(std::move(g));
  std::stable_sort(nonzero.begin(), nonzero.end(),
                   [](const FreeElement& a, const FreeElement& b) {
                     return *a.degree() < *b.degree();
                   });
  std::vector<FreeElement> kept;
  GroebnerBasis gb = GroebnerBasis::empty(parent);
  for (const FreeElement& g : nonzero) {
    FreeElement r = kept.empty() ? g : gb.normal_form(g);
    if (r.is_zero()) continue;
    kept.push_back(make_monic(r));
    gb = GroebnerBasis::compute(parent, kept);
  }
  return kept;
}

}  // namespace gmod
