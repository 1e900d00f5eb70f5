#pragma once

#include <string>

#include "gmod/duality.hpp"

namespace gmod {

struct CMficationReport {
  bool condition_i = false;    // candidate is Cohen-Macaulay
  bool condition_ii = false;   // dimensions equal
  bool condition_iii = false;  // two top local cohomology vanishings of Mt/M
  bool injective = false;
  std::string first_failure;   // empty on pass

  bool pass() const {
    return condition_i && condition_ii && condition_iii && injective;
  }
};

/// (G2 . F2)(M), the unique Cohen-Macaulayfication candidate.
FPModule cmfication_candidate(const FPModule& M);

CMficationReport verify_cmfication(const FPModule& M, const FPModule& Mt,
                                   const ModuleMap& iota);

enum class Theorem3Answer { confirmed, inconclusive, refuted };

/// Given a verified Cohen-Macaulayfication, checks it is isomorphic to the
/// candidate. "refuted" would indicate an implementation bug, not a
/// counterexample.
Theorem3Answer theorem3_check(const FPModule& M, const FPModule& Mt,
                              const ModuleMap& iota, const IsoOptions& opts = {});

/// Vanishing pattern H^i_m(Rq) = 0 for i outside {1, d}, checked through
/// Ext duality on a cyclic module. Buchsbaumness is not tested.
bool goto_pattern_check(const FPModule& Rq);

struct Theorem4Report {
  bool d_at_least_2 = false;
  bool m_kills_cokernel = false;
  CMficationReport cmf;

  bool pass() const { return d_at_least_2 && m_kills_cokernel && cmf.pass(); }
};

Theorem4Report theorem4_check(const FPModule& Rq, const FPModule& B,
                              const ModuleMap& iota);

struct Corollary2Report {
  FPModule ext_module;
  bool ext_is_cm = false;
  bool m_is_cm = false;
};

Corollary2Report corollary2_check(const FPModule& M);

struct PaperExample {
  Ideal I;          // (x1,x2) n (x3,x4), computed by ideal intersection
  FPModule R;       // S/I
  FPModule B;       // S/(x1,x2) + S/(x3,x4)
  ModuleMap iota;   // diagonal reduction map R -> B
};

/// The worked 4-variable example; requires n = 4.
PaperExample paper_example(const RingPtr& ring);

}  // namespace gmod
