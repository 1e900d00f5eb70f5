#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "gmod/free_module.hpp"

namespace gmod {

/// Module monomial m*e_pos. Position-over-term order: the smaller position
/// is the larger generator (e_0 > e_1 > ...), ties broken by grevlex.
struct ModTerm {
  int pos = 0;
  Monomial mono;
};

std::strong_ordering mod_term_cmp(const ModTerm& a, const ModTerm& b);

struct LeadTerm {
  int pos = 0;
  Monomial mono;
  std::int64_t coeff = 0;
};

/// Leading term of a nonzero element (nullopt for zero).
std::optional<LeadTerm> lead_term(const FreeElement& v);

/// Reduced Groebner basis of a submodule of a free module: elements monic,
/// fully tail-reduced against each other, sorted by leading term descending.
class GroebnerBasis {
 public:
  static GroebnerBasis compute(const FreeModule& parent,
                               const std::vector<FreeElement>& gens);
  static GroebnerBasis empty(const FreeModule& parent);

  const FreeModule& parent() const { return parent_; }
  const std::vector<FreeElement>& elements() const { return elems_; }
  bool is_zero_submodule() const { return elems_.empty(); }

  /// Unique fully reduced remainder of v; zero iff v lies in the submodule.
  FreeElement normal_form(const FreeElement& v) const;
  bool contains(const FreeElement& v) const;

  bool operator==(const GroebnerBasis& o) const { return elems_ == o.elems_; }

 private:
  FreeModule parent_;
  std::vector<FreeElement> elems_;
};

struct SyzygyResult {
  FreeModule coefficient_module;  // free on the input generators' degrees
  std::vector<FreeElement> generators;  // reduced GB of the syzygy module
};

/// Generating set of the syzygy module of `gens`: elements w of the
/// coefficient module with sum_j w_j * gens[j] = 0.
SyzygyResult syzygies(const FreeModule& parent,
                      const std::vector<FreeElement>& gens);

/// Same, with declared generator degrees so zero generators are allowed
/// (each contributes a free syzygy).
SyzygyResult syzygies_with_degrees(const FreeModule& parent,
                                   const std::vector<FreeElement>& gens,
                                   const std::vector<int>& degrees);

/// Membership and coordinate solving against a fixed generating set.
class SubmoduleSolver {
 public:
  SubmoduleSolver(const FreeModule& parent, std::vector<FreeElement> gens);

  bool contains(const FreeElement& v) const;
  /// Coordinates w with v = sum_j w_j * gens[j]; throws if v is not a member.
  FreeElement coordinates(const FreeElement& v) const;
  const FreeModule& coefficient_module() const { return coeff_module_; }

 private:
  FreeModule parent_;
  std::vector<FreeElement> gens_;
  FreeModule graph_module_;
  FreeModule coeff_module_;
  GroebnerBasis graph_gb_;
};

/// Minimal homogeneous generating set of the submodule generated by `gens`
/// (graded Nakayama: greedy by ascending degree, discarding members of the
/// span of what is already kept).
std::vector<FreeElement> minimal_generators(const FreeModule& parent,
                                            std::vector<FreeElement> gens);

}  // namespace gmod
