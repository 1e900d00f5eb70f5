#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gmod/monomial.hpp"
#include "gmod/ring.hpp"

namespace gmod {

struct Term {
  std::int64_t coeff = 0;  // least nonnegative residue, never 0 when stored
  Monomial mono;
};

/// Homogeneous polynomial; terms strictly descending in grevlex, no zero
/// coefficients, no duplicate monomials. The zero polynomial has no terms
/// and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, int i, int power = 1);
  static Polynomial monomial(RingPtr ring, std::int64_t c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree();
  }
  const Term& leading_term() const { return terms_.front(); }
  bool is_constant() const {
    return !terms_.empty() && terms_.front().mono.degree() == 0;
  }

  bool operator==(const Polynomial& o) const;

  friend Polynomial poly_normalize(RingPtr ring,
                                   std::vector<std::pair<std::int64_t, Monomial>> raw);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Merge duplicates, drop zeros, sort descending; rejects inhomogeneous input.
Polynomial poly_normalize(RingPtr ring,
                          std::vector<std::pair<std::int64_t, Monomial>> raw);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_scale(const Polynomial& a, std::int64_t c);
/// a * (c * m); preserves term order without re-sorting.
Polynomial poly_mul_term(const Polynomial& a, std::int64_t c, const Monomial& m);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

}  // namespace gmod
