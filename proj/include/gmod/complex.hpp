#pragma once

#include <optional>
#include <vector>

#include "gmod/fp_module.hpp"

namespace gmod {

/// Finite chain complex of presented modules: maps d_i: terms[i] ->
/// terms[i-1] for i = 1..length, consecutive composites zero.
class Complex {
 public:
  Complex() = default;
  Complex(std::vector<FPModule> terms, std::vector<ModuleMap> maps,
          std::optional<ModuleMap> augmentation = std::nullopt);

  int length() const { return static_cast<int>(maps_.size()); }
  const std::vector<FPModule>& terms() const { return terms_; }
  const FPModule& term(int i) const { return terms_.at(i); }
  /// d_i: term(i) -> term(i-1), valid for 1 <= i <= length.
  const ModuleMap& differential(int i) const { return maps_.at(i - 1); }
  const std::optional<ModuleMap>& augmentation() const { return augmentation_; }

 private:
  std::vector<FPModule> terms_;
  std::vector<ModuleMap> maps_;  // maps_[i-1] = d_i
  std::optional<ModuleMap> augmentation_;
};

/// ker(d_i)/im(d_{i+1}) as a presented module; boundary maps are taken to
/// be zero beyond the range of the complex.
FPModule complex_homology(const Complex& C, int i);

/// Minimal graded free resolution of M of length min(pd(M), max_length),
/// with augmentation term(0) -> M. Terms are free (no relations).
Complex free_resolution(const FPModule& M, int max_length);

/// Length of the minimal free resolution; error for the zero module.
int pd(const FPModule& M);

struct BettiRow {
  int index = 0;
  std::vector<int> twists;  // sorted ascending
};
std::vector<BettiRow> betti_table(const Complex& resolution);

enum class KoszulVariant { chain, cochain };

/// Exterior-algebra Koszul complex on xs tensored with M (chain), or its
/// Hom-into-the-ring dual (cochain). The cochain complex is stored in chain
/// indexing: term(j) = K^{r-j}, so H^i(K^) = complex_homology(., r-i).
Complex koszul_complex(const std::vector<Polynomial>& xs, const FPModule& M,
                       KoszulVariant variant);

/// H^i(K^(xs; M)) computed from the cochain Koszul complex.
FPModule koszul_cochain_cohomology(const std::vector<Polynomial>& xs,
                                   const FPModule& M, int i);

}  // namespace gmod
