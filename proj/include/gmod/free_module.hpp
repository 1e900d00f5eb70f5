#pragma once

#include <optional>
#include <vector>

#include "gmod/polynomial.hpp"

namespace gmod {

/// Twisted graded free module S(-a_1) + ... + S(-a_r); generator i sits in
/// degree twists[i]. Rank 0 is the zero module.
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> twists)
      : ring_(std::move(ring)), twists_(std::move(twists)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& twists() const { return twists_; }
  int twist(int i) const { return twists_.at(i); }
  int rank() const { return static_cast<int>(twists_.size()); }

  bool operator==(const FreeModule& o) const {
    return twists_ == o.twists_ && ring_ && o.ring_ && ring_->same_as(*o.ring_);
  }

 private:
  RingPtr ring_;
  std::vector<int> twists_;
};

/// Homogeneous element of a free module; component i is zero or homogeneous
/// of degree (degree - twists[i]).
class FreeElement {
 public:
  FreeElement() = default;
  FreeElement(FreeModule parent, std::vector<Polynomial> components);

  const FreeModule& parent() const { return parent_; }
  const std::vector<Polynomial>& components() const { return comps_; }
  const Polynomial& component(int i) const { return comps_.at(i); }
  bool is_zero() const;
  /// Degree of a nonzero homogeneous element; nullopt for zero.
  std::optional<int> degree() const { return degree_; }

  bool operator==(const FreeElement& o) const;

 private:
  FreeModule parent_;
  std::vector<Polynomial> comps_;
  std::optional<int> degree_;
};

FreeElement element_zero(const FreeModule& F);
FreeElement element_unit(const FreeModule& F, int pos);
FreeElement element_add(const FreeElement& a, const FreeElement& b);
FreeElement element_sub(const FreeElement& a, const FreeElement& b);
FreeElement element_scale(const FreeElement& a, std::int64_t c);
FreeElement element_mul_term(const FreeElement& a, std::int64_t c, const Monomial& m);
FreeElement element_mul_poly(const FreeElement& a, const Polynomial& f);

/// Homogeneous degree-0 map of free modules; entry (i,j) is zero or
/// homogeneous of degree source.twists[j] - target.twists[i].
class FreeMap {
 public:
  FreeMap() = default;
  FreeMap(FreeModule source, FreeModule target,
          std::vector<std::vector<Polynomial>> matrix);

  static FreeMap identity(const FreeModule& F);
  static FreeMap zero(const FreeModule& source, const FreeModule& target);
  /// Map whose columns are the given elements of `target`.
  static FreeMap from_columns(const FreeModule& target,
                              const std::vector<FreeElement>& columns);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  const std::vector<std::vector<Polynomial>>& matrix() const { return mat_; }
  const Polynomial& entry(int i, int j) const { return mat_.at(i).at(j); }

  FreeElement column(int j) const;
  std::vector<FreeElement> columns() const;
  FreeElement apply(const FreeElement& v) const;
  bool is_zero() const;

  bool operator==(const FreeMap& o) const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<std::vector<Polynomial>> mat_;  // target.rank x source.rank
};

/// g after f (matrix product g*f); requires f.target == g.source.
FreeMap map_compose(const FreeMap& g, const FreeMap& f);

/// Returns f unchanged if every entry satisfies the twist equation, else
/// throws inhomogeneous_error naming the offending entry.
const FreeMap& map_degree_check(const FreeMap& f);

}  // namespace gmod
