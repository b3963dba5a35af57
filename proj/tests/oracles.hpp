#pragma once

// Brute-force reference computations used only by the tests. None of them
// calls into the library beyond plain data types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "ncsurf/laurent.hpp"

namespace oracle {

using Mono = std::vector<int>;
using MonoSet = std::set<Mono>;

inline Mono mono(const ncsurf::ExponentVector& e) {
  return Mono(e.entries().begin(), e.entries().end());
}

inline MonoSet monos(const std::vector<ncsurf::ExponentVector>& es) {
  MonoSet out;
  for (const auto& e : es) out.insert(mono(e));
  return out;
}

// Every exponent vector in [0, bound]^n.
inline std::vector<Mono> box(std::size_t n, int bound) {
  std::vector<Mono> out;
  Mono cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == bound) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

inline int degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// The ideal generated by `gens`, truncated to the box [0, bound]^n, as an
// explicit set of monomials.
inline MonoSet ideal_in_box(const MonoSet& gens, std::size_t n, int bound) {
  MonoSet out;
  for (const auto& e : box(n, bound))
    for (const auto& g : gens) {
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) ok = ok && g[i] <= e[i];
      if (ok) {
        out.insert(e);
        break;
      }
    }
  return out;
}

// Minimal elements of a monomial set closed upwards inside a box: no
// predecessor (one exponent lowered by one) lies in the set.
inline MonoSet minimal_elements(const MonoSet& s) {
  MonoSet out;
  for (const auto& e : s) {
    bool minimal = true;
    for (std::size_t i = 0; i < e.size() && minimal; ++i) {
      if (e[i] == 0) continue;
      Mono f = e;
      --f[i];
      if (s.count(f)) minimal = false;
    }
    if (minimal) out.insert(e);
  }
  return out;
}

inline MonoSet pairwise_sums(const MonoSet& a, const MonoSet& b) {
  MonoSet out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Mono s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.insert(s);
    }
  return out;
}

// Admissibility of x^a y^b at weight m from the branch conditions written
// out by hand: along x = 0 the restriction is y^(b-m) (dy)^m when a = 0 and
// must be polynomial; symmetrically along y = 0.
inline bool gluing_admissible(int a, int b, int m) {
  return (a > 0 || b >= m) && (b > 0 || a >= m);
}

// Roots of a univariate polynomial (coefficients ascending, leading nonzero)
// by Durand-Kerner iteration.
inline std::vector<std::complex<double>> roots(const std::vector<double>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<double>(i));
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i] / c[n];
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      z[i] -= eval(z[i]) / denom;
    }
  }
  return z;
}

// Number of numerically distinct roots of a binary form given by its
// coefficient row (X^d, X^(d-1) Y, ..., Y^d), counting (1 : 0).
inline int distinct_roots_numeric(const std::vector<double>& row, double tol = 1e-6) {
  const std::size_t d = row.size() - 1;
  // Multiplicity at infinity = number of leading zeros in the row.
  std::size_t lead = 0;
  while (lead < row.size() && row[lead] == 0.0) ++lead;
  std::vector<double> asc;  // f(X, 1) ascending in X, degree d - lead
  for (std::size_t k = d + 1; k-- > lead;) asc.push_back(row[k]);
  std::vector<std::complex<double>> found;
  if (asc.size() > 1) {
    for (auto r : roots(asc)) {
      bool dup = std::any_of(found.begin(), found.end(),
                             [&](auto s) { return std::abs(s - r) < tol; });
      if (!dup) found.push_back(r);
    }
  }
  return static_cast<int>(found.size()) + (lead > 0 ? 1 : 0);
}

// Chord-tangent addition on y^2 = x^3 + a x + b checked through collinearity:
// P, Q, -(P+Q) lie on one line (or a tangent).
template <class Q>
bool collinear(const Q& x1, const Q& y1, const Q& x2, const Q& y2, const Q& x3, const Q& y3) {
  return (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1) == 0;
}

}  // namespace oracle
