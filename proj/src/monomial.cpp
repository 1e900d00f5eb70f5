#include "gmod/monomial.hpp"

namespace gmod {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  long long sum = 0;
  for (int v : e_) {
    if (v < 0) throw structural_error("negative exponent");
    if (v > kMaxExponent) throw structural_error("exponent overflow");
    sum += v;
  }
  if (sum > kMaxExponent) throw structural_error("total degree overflow");
  deg_ = static_cast<int>(sum);
}

Monomial Monomial::variable(int nvars, int i, int power) {
  std::vector<int> e(nvars, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw structural_error("monomials with mismatched variable counts");
  std::vector<int> e(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) e[i] = a.exponent(i) + b.exponent(i);
  return Monomial(std::move(e));
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw structural_error("monomials with mismatched variable counts");
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  if (a.nvars() != b.nvars())
    throw structural_error("monomials with mismatched variable counts");
  std::vector<int> e(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) {
    e[i] = b.exponent(i) - a.exponent(i);
    if (e[i] < 0) throw structural_error("monomial division not exact");
  }
  return Monomial(std::move(e));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw structural_error("monomials with mismatched variable counts");
  std::vector<int> e(a.nvars());
  for (int i = 0; i < a.nvars(); ++i)
    e[i] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
  return true;
}

std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw structural_error("monomials with mismatched variable counts");
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  // equal degree: last nonzero difference decides, smaller exponent wins
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? std::strong_ordering::greater
                             : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace gmod
