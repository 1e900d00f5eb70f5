#pragma once

// Test-side oracles, kept independent of the library's Groebner/resolution
// machinery: naive division and S-pair completion, plain linear algebra on
// graded slices, and the finite-stage Cech/Koszul colimit for local
// cohomology. Everything here recomputes from raw presentation data.

#include <cstdint>
#include <vector>

#include "gmod/fp_module.hpp"

namespace oracles {

using gmod::FPModule;
using gmod::FreeElement;
using gmod::FreeModule;
using gmod::Monomial;
using gmod::Polynomial;
using gmod::RingPtr;

// --- naive Groebner machinery (no criteria, own reduction loop) ---

/// Remainder of v under naive repeated lead-reduction against gens.
FreeElement naive_reduce(const FreeElement& v,
                         const std::vector<FreeElement>& gens);

/// Buchberger completion with no criteria, run to a fixpoint.
std::vector<FreeElement> naive_completion(const FreeModule& parent,
                                          std::vector<FreeElement> gens);

/// True iff every S-pair of `basis` naive-reduces to zero.
bool spair_criterion_holds(const std::vector<FreeElement>& basis);

// --- plain dense linear algebra over F_p ---

struct Mat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::int64_t>> a;

  static Mat zero(int r, int c);
};

int rank_of(Mat m, std::int64_t p);
Mat mat_mul(const Mat& x, const Mat& y, std::int64_t p);

// --- graded slices recomputed from raw presentation data ---

class Slice {
 public:
  Slice(const FPModule& M, int d);

  int dim() const { return dim_; }
  int degree() const { return d_; }
  int ambient_dim() const { return static_cast<int>(basis_pos_.size()); }

  /// Quotient coordinates of an ambient element given by its components.
  std::vector<std::int64_t> project(const std::vector<Polynomial>& comps) const;

 private:
  friend Mat mult_matrix(const FPModule&, const Slice&, const Slice&,
                         const Polynomial&);
  int d_;
  std::int64_t p_;
  int dim_ = 0;
  std::vector<int> basis_pos_;
  std::vector<Monomial> basis_mono_;
  std::vector<std::vector<std::int64_t>> span_;  // echelon rows of rel span
  std::vector<int> span_pivot_;
  std::vector<int> quotient_cols_;
  std::vector<int> col_of_quotient_;  // inverse partial map

  std::vector<std::int64_t> reduce(std::vector<std::int64_t> row) const;
  int column_of(int pos, const Monomial& m) const;
};

/// dim_k M_d by row reduction of the relation span (the Hilbert oracle).
int hf_oracle(const FPModule& M, int d);

/// Multiplication by f as a matrix between quotient slices.
Mat mult_matrix(const FPModule& M, const Slice& from, const Slice& to,
                const Polynomial& f);

/// dim_k of the degree-d piece of Hom(A, B) (module maps modulo those with
/// image inside the target relations), by plain linear algebra.
int hom_dim_oracle(const FPModule& A, const FPModule& B, int d);

/// dim_k H_i(K_.(xs; M))_delta for the chain Koszul complex, computed from
/// slice dimensions and ranks only.
int koszul_chain_homology_dim(const FPModule& M,
                              const std::vector<Polynomial>& xs, int i,
                              int delta);

/// dim_k H^i(K^.(xs; M))_delta for the cochain complex.
int koszul_cochain_cohomology_dim(const FPModule& M,
                                  const std::vector<Polynomial>& xs, int i,
                                  int delta);

/// Finite-stage colimit oracle for top local cohomology H^r_(xs)(M) in one
/// internal degree: stage t is coker(+_j M_{delta+t(s-d_j)} -> M_{delta+ts})
/// with s = sum deg x_j, transition maps multiplication by prod x_j.
struct ColimitResult {
  int stabilized_dim = -1;
  bool stabilized = false;          // consecutive composite ranks agree
  std::vector<int> stage_dims;      // dim of each stage's cokernel
};
ColimitResult cech_colimit_top(const FPModule& M,
                               const std::vector<Polynomial>& xs, int delta,
                               int max_stage);

}  // namespace oracles
