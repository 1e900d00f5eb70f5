#pragma once

#include <random>
#include <vector>

#include "gmod/cmfication.hpp"
#include "gmod/text.hpp"

namespace fixtures {

using namespace gmod;

inline RingPtr ring4() {
  static RingPtr S = make_ring(32003, {"x1", "x2", "x3", "x4"});
  return S;
}

inline Polynomial var(int i) { return Polynomial::variable(ring4(), i); }

inline Polynomial pp(const std::string& text) {
  return parse_poly(ring4(), text);
}

inline FPModule ring_as_module() {
  return free_as_module(FreeModule(ring4(), {0}));
}

inline FPModule residue_field() {
  return quotient_ring_module(ring4(), {var(0), var(1), var(2), var(3)});
}

/// S/(x1x3, x1x4, x2x3, x2x4), the worked example quotient.
inline FPModule example_quotient() {
  return quotient_ring_module(
      ring4(), {pp("x1*x3"), pp("x1*x4"), pp("x2*x3"), pp("x2*x4")});
}

inline FPModule plane12() {
  return quotient_ring_module(ring4(), {var(0), var(1)});
}

inline FPModule hypersurface() {
  return quotient_ring_module(ring4(), {pp("x1*x2 - x3*x4")});
}

inline FPModule line() {
  return quotient_ring_module(ring4(), {var(0), var(1), var(2)});
}

/// The Cohen-Macaulay suite used across the duality tests.
inline std::vector<FPModule> cm_suite() {
  return {ring_as_module(), plane12(), hypersurface(), line(), residue_field()};
}

/// Rank-1 elements of S (for ideal-style submodule tests).
inline FreeElement scalar_elem(const Polynomial& f) {
  return FreeElement(FreeModule(ring4(), {0}), {f});
}

/// Random homogeneous polynomial of the given degree (possibly zero).
inline Polynomial random_poly(std::mt19937_64& rng, int degree,
                              int max_terms = 4) {
  const RingPtr& S = ring4();
  std::vector<std::pair<std::int64_t, Monomial>> raw;
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(S->nvars(), 0);
    int left = degree;
    for (int v = 0; v < S->nvars() - 1; ++v) {
      e[v] = static_cast<int>(rng() % (left + 1));
      left -= e[v];
    }
    e[S->nvars() - 1] = left;
    raw.emplace_back(static_cast<std::int64_t>(rng() % S->characteristic()),
                     Monomial(e));
  }
  return poly_normalize(S, std::move(raw));
}

/// Seeded random artinian monomial quotient: contains a power of every
/// variable plus a few extra monomials.
inline FPModule random_finite_length_quotient(std::mt19937_64& rng) {
  const RingPtr& S = ring4();
  std::vector<Polynomial> gens;
  for (int v = 0; v < S->nvars(); ++v) {
    int e = 1 + static_cast<int>(rng() % 3);
    gens.push_back(Polynomial::monomial(
        S, 1, Monomial::variable(S->nvars(), v, e)));
  }
  int extras = static_cast<int>(rng() % 3);
  for (int t = 0; t < extras; ++t) {
    std::vector<int> e(S->nvars(), 0);
    int degree = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < degree; ++k) e[rng() % S->nvars()] += 1;
    gens.push_back(Polynomial::monomial(S, 1, Monomial(e)));
  }
  return quotient_ring_module(S, gens);
}

}  // namespace fixtures
