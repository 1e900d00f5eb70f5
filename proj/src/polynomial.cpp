#include "gmod/polynomial.hpp"

#include <algorithm>

namespace gmod {

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  return monomial(std::move(ring), c, Monomial::one(ring ? ring->nvars() : 0));
}

Polynomial Polynomial::variable(RingPtr ring, int i, int power) {
  int n = ring->nvars();
  return monomial(std::move(ring), 1, Monomial::variable(n, i, power));
}

Polynomial Polynomial::monomial(RingPtr ring, std::int64_t c, Monomial m) {
  std::vector<std::pair<std::int64_t, Monomial>> raw;
  raw.emplace_back(c, std::move(m));
  return poly_normalize(std::move(ring), std::move(raw));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono))
      return false;
  return true;
}

Polynomial poly_normalize(RingPtr ring,
                          std::vector<std::pair<std::int64_t, Monomial>> raw) {
  if (!ring) throw structural_error("polynomial needs a ring");
  const std::int64_t p = ring->characteristic();
  const int n = ring->nvars();
  for (auto& [c, m] : raw) {
    if (m.nvars() != n)
      throw structural_error("monomial variable count does not match ring");
    c = fp_normalize(c, p);
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return grevlex_cmp(a.second, b.second) == std::strong_ordering::greater;
  });
  Polynomial out(ring);
  for (auto& [c, m] : raw) {
    if (c == 0) continue;
    if (!out.terms_.empty() && out.terms_.back().mono == m) {
      out.terms_.back().coeff = fp_add(out.terms_.back().coeff, c, p);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(Term{c, m});
    }
  }
  if (!out.terms_.empty()) {
    int d = out.terms_.front().mono.degree();
    for (const Term& t : out.terms_)
      if (t.mono.degree() != d)
        throw inhomogeneous_error("inhomogeneous input: mixed total degrees");
  }
  return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  require_same_ring(a.ring(), b.ring());
  if (a.degree() != b.degree())
    throw inhomogeneous_error("inhomogeneous input: sum of different degrees");
  const std::int64_t p = a.ring()->characteristic();
  std::vector<std::pair<std::int64_t, Monomial>> raw;
  raw.reserve(a.terms().size() + b.terms().size());
  // merge two descending term lists
  size_t i = 0, j = 0;
  while (i < a.terms().size() && j < b.terms().size()) {
    auto c = grevlex_cmp(a.terms()[i].mono, b.terms()[j].mono);
    if (c == std::strong_ordering::greater) {
      raw.emplace_back(a.terms()[i].coeff, a.terms()[i].mono);
      ++i;
    } else if (c == std::strong_ordering::less) {
      raw.emplace_back(b.terms()[j].coeff, b.terms()[j].mono);
      ++j;
    } else {
      std::int64_t s = fp_add(a.terms()[i].coeff, b.terms()[j].coeff, p);
      if (s != 0) raw.emplace_back(s, a.terms()[i].mono);
      ++i;
      ++j;
    }
  }
  for (; i < a.terms().size(); ++i)
    raw.emplace_back(a.terms()[i].coeff, a.terms()[i].mono);
  for (; j < b.terms().size(); ++j)
    raw.emplace_back(b.terms()[j].coeff, b.terms()[j].mono);
  return poly_normalize(a.ring(), std::move(raw));
}

Polynomial poly_neg(const Polynomial& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, a.ring()->characteristic() - 1);
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  return poly_add(a, poly_neg(b));
}

Polynomial poly_scale(const Polynomial& a, std::int64_t c) {
  if (a.is_zero()) return a;
  const std::int64_t p = a.ring()->characteristic();
  c = fp_normalize(c, p);
  if (c == 0) return Polynomial::zero(a.ring());
  std::vector<std::pair<std::int64_t, Monomial>> raw;
  raw.reserve(a.terms().size());
  for (const Term& t : a.terms())
    raw.emplace_back(fp_mul(t.coeff, c, p), t.mono);
  return poly_normalize(a.ring(), std::move(raw));
}

Polynomial poly_mul_term(const Polynomial& a, std::int64_t c, const Monomial& m) {
  if (a.is_zero()) return a;
  const std::int64_t p = a.ring()->characteristic();
  c = fp_normalize(c, p);
  if (c == 0) return Polynomial::zero(a.ring());
  std::vector<std::pair<std::int64_t, Monomial>> raw;
  raw.reserve(a.terms().size());
  for (const Term& t : a.terms())
    raw.emplace_back(fp_mul(t.coeff, c, p), mono_mul(t.mono, m));
  return poly_normalize(a.ring(), std::move(raw));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  require_same_ring(a.ring(), b.ring());
  const std::int64_t p = a.ring()->characteristic();
  std::vector<std::pair<std::int64_t, Monomial>> raw;
  raw.reserve(a.terms().size() * b.terms().size());
  for (const Term& s : a.terms())
    for (const Term& t : b.terms())
      raw.emplace_back(fp_mul(s.coeff, t.coeff, p), mono_mul(s.mono, t.mono));
  return poly_normalize(a.ring(), std::move(raw));
}

}  // namespace gmod
