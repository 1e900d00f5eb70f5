#include "gmod/cmfication.hpp"

namespace gmod {

FPModule cmfication_candidate(const FPModule& M) {
  if (M.is_zero())
    throw structural_error("candidate undefined for the zero module");
  return G2(F2(M));
}

CMficationReport verify_cmfication(const FPModule& M, const FPModule& Mt,
                                   const ModuleMap& iota) {
  if (!(iota.source() == M) || !(iota.target() == Mt))
    throw structural_error("embedding does not connect the given modules");
  CMficationReport rep;
  const int n = M.ring()->nvars();
  const int d = krull_dim(M);

  rep.injective = kernel(iota).module.is_zero();
  rep.condition_i = is_cohen_macaulay(Mt);
  rep.condition_ii = (krull_dim(Mt) == d);
  FPModule Q = cokernel(iota);
  // H^{d-1} and H^d of the quotient vanish iff their Matlis duals do
  FPModule ext_top = ext_module(n - d, Q, -n);
  FPModule ext_next = ext_module(n - d + 1, Q, -n);
  rep.condition_iii = ext_top.is_zero() && ext_next.is_zero();

  if (!rep.injective) rep.first_failure = "injective";
  else if (!rep.condition_i) rep.first_failure = "condition_i";
  else if (!rep.condition_ii) rep.first_failure = "condition_ii";
  else if (!rep.condition_iii) rep.first_failure = "condition_iii";
  return rep;
}

Theorem3Answer theorem3_check(const FPModule& M, const FPModule& Mt,
                              const ModuleMap& iota, const IsoOptions& opts) {
  CMficationReport rep = verify_cmfication(M, Mt, iota);
  if (!rep.pass())
    throw structural_error("theorem3_check requires a verified Cohen-Macaulayfication");
  IsoResult iso = is_isomorphic(Mt, cmfication_candidate(M), opts);
  switch (iso.answer) {
    case IsoAnswer::yes:
      return Theorem3Answer::confirmed;
    case IsoAnswer::no:
      return Theorem3Answer::refuted;
    default:
      return Theorem3Answer::inconclusive;
  }
}

bool goto_pattern_check(const FPModule& Rq) {
  if (Rq.is_zero() || Rq.ambient().rank() != 1 || Rq.ambient().twist(0) != 0)
    throw structural_error("goto_pattern_check needs a cyclic module S/J");
  const int n = Rq.ring()->nvars();
  const int d = krull_dim(Rq);
  if (d < 1) throw structural_error("goto_pattern_check needs dimension >= 1");
  for (int i = 0; i <= d; ++i) {
    if (i == 1 || i == d) continue;
    if (!ext_module(n - i, Rq, -n).is_zero()) return false;
  }
  return true;
}

Theorem4Report theorem4_check(const FPModule& Rq, const FPModule& B,
                              const ModuleMap& iota) {
  Theorem4Report rep;
  const int d = krull_dim(Rq);
  rep.d_at_least_2 = (d >= 2);
  if (!rep.d_at_least_2)
    throw structural_error("theorem4_check requires dimension >= 2");

  FPModule Q = cokernel(iota);
  rep.m_kills_cokernel = true;
  if (!Q.is_zero()) {
    const RingPtr& ring = Q.ring();
    for (int v = 0; v < ring->nvars() && rep.m_kills_cokernel; ++v) {
      Polynomial xv = Polynomial::variable(ring, v);
      for (int i = 0; i < Q.ambient().rank(); ++i) {
        std::vector<Polynomial> comps(Q.ambient().rank(),
                                      Polynomial::zero(ring));
        comps[i] = xv;
        FreeElement e(Q.ambient(), std::move(comps));
        if (!Q.relation_basis().contains(e)) {
          rep.m_kills_cokernel = false;
          break;
        }
      }
    }
  }
  rep.cmf = verify_cmfication(Rq, B, iota);
  return rep;
}

Corollary2Report corollary2_check(const FPModule& M) {
  if (M.is_zero())
    throw structural_error("corollary2_check undefined for the zero module");
  Corollary2Report rep;
  const int n = M.ring()->nvars();
  const int d = krull_dim(M);
  rep.ext_module = ext_module(n - d, M, -n);
  rep.ext_is_cm = is_cohen_macaulay(rep.ext_module);
  rep.m_is_cm = is_cohen_macaulay(M);
  return rep;
}

PaperExample paper_example(const RingPtr& ring) {
  if (ring->nvars() != 4)
    throw structural_error("the worked example needs a 4-variable ring");
  PaperExample ex;
  auto var = [&](int i) { return Polynomial::variable(ring, i); };
  Ideal I1 = make_ideal(ring, {var(0), var(1)});
  Ideal I2 = make_ideal(ring, {var(2), var(3)});
  ex.I = ideal_intersect(I1, I2);
  ex.R = quotient_ring_module(ring, ex.I.groebner);
  FPModule A = quotient_ring_module(ring, I1.groebner);
  FPModule B2 = quotient_ring_module(ring, I2.groebner);
  ex.B = direct_sum(A, B2);
  // diagonal reduction map S/I -> S/(x1,x2) + S/(x3,x4)
  std::vector<std::vector<Polynomial>> m(ex.B.ambient().rank(),
                                         std::vector<Polynomial>(1));
  for (int i = 0; i < ex.B.ambient().rank(); ++i)
    m[i][0] = Polynomial::constant(ring, 1);
  ex.iota = ModuleMap(ex.R, ex.B,
                      FreeMap(ex.R.ambient(), ex.B.ambient(), std::move(m)));
  return ex;
}

}  // namespace gmod
