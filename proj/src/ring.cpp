#include "gmod/ring.hpp"

#include <set>

namespace gmod {

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
  if (a == 0) throw error("division by zero in F_p");
  // extended Euclid
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  return fp_normalize(s0, p);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

RingSpec::RingSpec(std::int64_t p, std::vector<std::string> variable_names)
    : p_(p), names_(std::move(variable_names)) {
  if (!is_prime(p_)) throw structural_error("characteristic must be prime");
  if (p_ >= (std::int64_t{1} << 31))
    throw structural_error("characteristic too large for exact arithmetic");
  if (names_.empty()) throw structural_error("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw structural_error("empty variable name");
    if (!seen.insert(n).second)
      throw structural_error("duplicate variable name: " + n);
  }
}

int RingSpec::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

RingPtr make_ring(std::int64_t p, std::vector<std::string> variable_names) {
  return std::make_shared<const RingSpec>(p, std::move(variable_names));
}

}  // namespace gmod
