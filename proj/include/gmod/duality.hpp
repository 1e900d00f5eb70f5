#pragma once

#include <cstdint>
#include <vector>

#include "gmod/invariants.hpp"

namespace gmod {

/// Artinian module X represented through its Matlis dual: a finitely
/// generated module N with X = D(N). Every artinian-side invariant is
/// defined through N.
class ArtinianRep {
 public:
  ArtinianRep() = default;
  explicit ArtinianRep(FPModule dual) : dual_(std::move(dual)) {}

  const FPModule& dual() const { return dual_; }
  bool is_zero() const { return dual_.is_zero(); }

  bool operator==(const ArtinianRep& o) const { return dual_ == o.dual_; }

 private:
  FPModule dual_;
};

/// System of parameters: homogeneous elements whose quotient has finite
/// length, with target dimension equal to their count.
struct SOP {
  std::vector<Polynomial> elements;
  int target_dim = 0;
};

ArtinianRep F1(const FPModule& M);
ArtinianRep F2(const FPModule& M);  // top local cohomology, dually represented
FPModule G1(const ArtinianRep& X);
FPModule G2(const ArtinianRep& X);

int ndim(const ArtinianRep& X);    // -1 for 0
int width(const ArtinianRep& X);   // error for 0
bool is_co_cm(const ArtinianRep& X);

/// True iff xs is coregular on X, checked as a regular sequence on D(X).
bool is_coregular(const std::vector<Polynomial>& xs, const ArtinianRep& X);

/// M/(xs)M as a presented module.
FPModule quotient_by_elements(const FPModule& M,
                              const std::vector<Polynomial>& xs);

struct SopCheck {
  bool valid = false;
  int quotient_dim = 0;
  int colength = -1;  // total length of the quotient when finite
};
SopCheck validate_sop(const SOP& sop, const FPModule& M);

struct LocalHomologyResult {
  FPModule module;      // D(H^d_(xs)(D(X))) as a finitely presented module
  int d = 0;
  int colength = 0;     // length of dual/(xs)dual, the verified hypothesis
};

/// Top local homology of X along a system of parameters for D(X); errors
/// out when the finite-length hypothesis fails.
LocalHomologyResult local_homology_top(const SOP& xs, const ArtinianRep& X);

/// Finite Koszul stage of the local homology inverse system:
/// dual = H^i(K^(x_1^t..x_r^t; D(X))).
ArtinianRep koszul_homology_artinian(const std::vector<Polynomial>& xs, int t,
                                     int i, const ArtinianRep& X);

struct SopSearchOptions {
  std::uint64_t seed = 0;
  int random_rounds = 64;
};

/// d = dim(M) homogeneous linear forms with finite-length quotient;
/// variables first, then seeded random linear combinations.
SOP find_sop(const FPModule& M, const SopSearchOptions& opts = {});

}  // namespace gmod
