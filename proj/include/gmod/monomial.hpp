#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "gmod/ring.hpp"

namespace gmod {

/// Exponent cap; anything larger is treated as an overflow error rather
/// than allowed to wrap.
inline constexpr int kMaxExponent = 1 << 20;

/// Monomial in a fixed number of variables with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int i, int power = 1);

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, must divide
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic order: higher total degree wins; on equal
/// degree the last nonzero exponent difference decides, smaller last
/// exponent winning (scanning from the last variable).
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b);

}  // namespace gmod
