#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmod/groebner.hpp"

namespace gmod {

/// Finitely presented graded module M = coker(relations -> ambient).
/// Canonical form: relations stored as a reduced Groebner basis and the
/// presentation minimized (no degree-0 entries, no redundant generators).
class FPModule {
 public:
  FPModule() = default;

  const FreeModule& ambient() const { return ambient_; }
  const RingPtr& ring() const { return ambient_.ring(); }
  const std::vector<FreeElement>& relations() const { return rels_; }
  const GroebnerBasis& relation_basis() const { return rel_gb_; }
  int generator_count() const { return ambient_.rank(); }
  bool is_zero() const { return ambient_.rank() == 0; }

  /// Relations as a degree-0 map onto the ambient module.
  FreeMap relation_map() const;

  bool operator==(const FPModule& o) const {
    return ambient_ == o.ambient_ && rels_ == o.rels_;
  }

  friend FPModule present(const FreeModule& F, std::vector<FreeElement> rels);
  friend FPModule present_no_minimize(const FreeModule& F,
                                      std::vector<FreeElement> rels);

 private:
  FreeModule ambient_;
  std::vector<FreeElement> rels_;
  GroebnerBasis rel_gb_;
};

/// Canonical FPModule: relations replaced by their reduced Groebner basis,
/// then the presentation minimized.
FPModule present(const FreeModule& F, std::vector<FreeElement> rels);
FPModule present(const FreeModule& F, const FreeMap& rel);
/// Same but without the minimization pass (kept for block constructions
/// whose ambient layout must be preserved).
FPModule present_no_minimize(const FreeModule& F, std::vector<FreeElement> rels);

FPModule zero_module(const RingPtr& ring);
FPModule free_as_module(const FreeModule& F);
/// Cyclic module S/I.
FPModule quotient_ring_module(const RingPtr& ring,
                              const std::vector<Polynomial>& ideal_gens);
/// M(-shift): every ambient twist raised by `shift`.
FPModule twist_module(const FPModule& M, int shift);

struct Minimalized {
  FPModule module;
  std::vector<int> surviving_generators;  // new index -> old ambient index
};
Minimalized minimalize_tracked(const FPModule& M);
FPModule minimalize(const FPModule& M);

/// Homogeneous degree-0 map of presented modules, given by a lift between
/// their ambients that carries source relations into target relations.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(FPModule source, FPModule target, FreeMap lift);

  static ModuleMap identity(const FPModule& M);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const FreeMap& lift() const { return lift_; }

  /// True iff the induced map is zero (every lift column lands in the
  /// target relations).
  bool is_zero_map() const;

 private:
  FPModule source_;
  FPModule target_;
  FreeMap lift_;
};

ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f);

struct KernelResult {
  FPModule module;
  ModuleMap inclusion;  // module -> source of f
};

KernelResult kernel(const ModuleMap& f);
FPModule cokernel(const ModuleMap& f);
FPModule direct_sum(const FPModule& A, const FPModule& B);
FPModule hom_module(const FPModule& A, const FPModule& B);

/// Homogeneous ideal of S in canonical (reduced GB) form.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> groebner;  // reduced, monic, sorted

  bool operator==(const Ideal& o) const { return groebner == o.groebner; }
  bool is_zero() const { return groebner.empty(); }
};

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// (N : v) for the relation submodule N of M's ambient presentation.
Ideal annihilator(const FPModule& M);

int hilbert_function(const FPModule& M, int d);

enum class IsoAnswer { yes, no, unknown };

struct IsoOptions {
  std::uint64_t seed = 0;
  int trials = 24;
  int degree_window = 6;  // Hilbert comparison pad beyond generator twists
};

struct IsoResult {
  IsoAnswer answer = IsoAnswer::unknown;
  std::string reason;
};

IsoResult is_isomorphic(const FPModule& A, const FPModule& B,
                        const IsoOptions& opts = {});

/// Basis of the space of degree-0 homomorphisms A -> B, each given by its
/// ambient lift (well-defined on A, not reduced modulo null-homotopies).
std::vector<FreeMap> hom_degree_zero_basis(const FPModule& A, const FPModule& B);

}  // namespace gmod
