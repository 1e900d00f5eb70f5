#pragma once

#include "gmod/complex.hpp"
#include "gmod/fp_module.hpp"

namespace gmod {

/// Sentinel used for depth of the zero module (conventionally +infinity).
inline constexpr int kDepthInfinity = 1 << 28;

struct InvariantReport {
  int dim = -1;        // -1 for the zero module
  int depth = 0;       // kDepthInfinity for the zero module
  bool is_cm = true;
  bool is_finite_length = true;
};

/// Ext^i_S(M, S(twist)): i-th cohomology of the dualized minimal free
/// resolution Hom(F_, S(twist)).
FPModule ext_module(int i, const FPModule& M, int twist);

/// Krull dimension: n minus the multiplicity of t=1 in the numerator of the
/// Hilbert series read off the minimal free resolution; -1 for 0.
int krull_dim(const FPModule& M);

/// n - pd(M) (Auslander-Buchsbaum); error for the zero module.
int depth(const FPModule& M);

bool is_cohen_macaulay(const FPModule& M);   // true for 0 by convention
bool is_finite_length(const FPModule& M);    // krull_dim <= 0

InvariantReport invariants(const FPModule& M);

/// Graded Matlis dual of a finite-length module: degree-d piece is the dual
/// of the degree-(-d) piece with transposed variable action.
FPModule matlis_dual_finite(const FPModule& M);

/// Degree window [lo, hi] outside of which a finite-length module vanishes.
struct DegreeWindow {
  int lo = 0;
  int hi = -1;  // empty when hi < lo
};
DegreeWindow finite_support_window(const FPModule& M);

}  // namespace gmod
