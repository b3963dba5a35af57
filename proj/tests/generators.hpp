#pragma once

// Hand-rolled random generators for the property tests. Seeds are fixed so
// every run sees the same cases.

#include <random>
#include <vector>

#include "ncsurf/laurent.hpp"
#include "ncsurf/monideal.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline ncsurf::Rational rational(Rng& rng, int span = 5) {
  int num = uniform(rng, -span, span);
  int den = uniform(rng, 1, span);
  ncsurf::Rational r(num, den);
  r.canonicalize();
  return r;
}

// Up to `terms` terms with exponents in [lo, hi] and small rational
// coefficients.
inline ncsurf::LaurentPolynomial laurent(Rng& rng, const ncsurf::VarList& vars, int terms = 4,
                                         int lo = -2, int hi = 3) {
  ncsurf::LaurentPolynomial p(vars);
  int n = uniform(rng, 0, terms);
  for (int i = 0; i < n; ++i) {
    ncsurf::ExponentVector e(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) e[k] = uniform(rng, lo, hi);
    p = p + ncsurf::LaurentPolynomial::monomial(vars, e, rational(rng));
  }
  return p;
}

inline ncsurf::LaurentPolynomial polynomial(Rng& rng, const ncsurf::VarList& vars, int terms = 4,
                                            int hi = 3) {
  return laurent(rng, vars, terms, 0, hi);
}

inline ncsurf::ExponentVector exponent(Rng& rng, std::size_t n, int hi) {
  ncsurf::ExponentVector e(n);
  for (std::size_t k = 0; k < n; ++k) e[k] = uniform(rng, 0, hi);
  return e;
}

// 1 to `max_gens` generators with exponents in [0, hi].
inline std::vector<ncsurf::ExponentVector> generators(Rng& rng, std::size_t n, int max_gens,
                                                      int hi) {
  std::vector<ncsurf::ExponentVector> out;
  int k = uniform(rng, 1, max_gens);
  for (int i = 0; i < k; ++i) out.push_back(exponent(rng, n, hi));
  return out;
}

}  // namespace gen
