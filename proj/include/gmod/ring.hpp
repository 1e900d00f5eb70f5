#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmod {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural misuse (mismatched rings, shapes, ranks).
class structural_error : public error {
 public:
  using error::error;
};

/// Inhomogeneous input where homogeneous data is required.
class inhomogeneous_error : public error {
 public:
  using error::error;
};

// --- prime field arithmetic, elements are least nonnegative residues ---

inline std::int64_t fp_normalize(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a - b;
  return s < 0 ? s + p : s;
}

inline std::int64_t fp_neg(std::int64_t a, std::int64_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;  // p < 2^31, so the product fits in int64
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p);

bool is_prime(std::int64_t p);

/// Ambient ring S = F_p[x_1..x_n], standard grading, graded reverse
/// lexicographic order. Immutable; shared by every object built over it.
class RingSpec {
 public:
  RingSpec(std::int64_t p, std::vector<std::string> variable_names);

  std::int64_t characteristic() const { return p_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int var_index(const std::string& name) const;  // -1 if unknown

  bool same_as(const RingSpec& other) const {
    return p_ == other.p_ && names_ == other.names_;
  }

 private:
  std::int64_t p_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::int64_t p, std::vector<std::string> variable_names);

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b))
    throw structural_error("objects belong to different rings");
}

}  // namespace gmod
