#pragma once

#include <string>
#include <string_view>

#include "ncsurf/laurent.hpp"
#include "ncsurf/logres.hpp"

namespace ncsurf {

// Coordinates of the cone uv = w^2 (as u, v; w is carried separately) and of
// its double-cover chart u = s^2, v = t^2, w = st.
const VarList& cone_vars();
const VarList& chart_vars();

// c0 + c1*w in k[u, v, w]/(w^2 - uv); the normal form never stores w^2.
class ConeElement {
 public:
  ConeElement() : c0_(cone_vars()), c1_(cone_vars()) {}
  ConeElement(LaurentPolynomial c0, LaurentPolynomial c1);

  static ConeElement constant(const Rational& c);
  static ConeElement u();
  static ConeElement v();
  static ConeElement w();
  // u^a v^b w^c, reduced.
  static ConeElement monomial(int a, int b, int c);
  // Polynomial syntax in u, v, w; w^k is reduced on the fly.
  static ConeElement parse(std::string_view text);

  const LaurentPolynomial& c0() const noexcept { return c0_; }
  const LaurentPolynomial& c1() const noexcept { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  ConeElement pow(unsigned k) const;
  std::string to_string() const;

  friend ConeElement operator+(const ConeElement& a, const ConeElement& b);
  friend ConeElement operator-(const ConeElement& a, const ConeElement& b);
  friend ConeElement operator*(const ConeElement& a, const ConeElement& b);
  friend bool operator==(const ConeElement&, const ConeElement&) = default;

 private:
  LaurentPolynomial c0_;
  LaurentPolynomial c1_;
};

// Laurent polynomial in (s, t) with every term of even total degree.
class ChartElement {
 public:
  // Throws std::invalid_argument if the (s,t) -> (-s,-t) invariance fails.
  explicit ChartElement(LaurentPolynomial p);
  const LaurentPolynomial& poly() const noexcept { return p_; }
  friend bool operator==(const ChartElement&, const ChartElement&) = default;

 private:
  LaurentPolynomial p_;
};

ChartElement to_chart(const ConeElement& e);

// Vanishing order of e along C2 = (v = w = 0). Throws ZeroInput.
int mult_along_C2(const ConeElement& e);

// coeff * (du^dw/u)^weight * v^(-weight/2); weight is even.
struct ConeSection {
  int weight;
  ConeElement coeff;

  ConeSection(int weight, ConeElement coeff);
  int half_weight() const { return weight / 2; }
};

// Restriction to C2 through the double-cover chart, normalized to
// h(u) (du)^weight. Throws IllegalPole.
BranchRestriction restrict_cone(const ConeSection& s);

// The same restriction computed inside the cone ring: rewrite the generator
// through (dw^du/w), reduce w^2 = uv, and take the residue along w = 0.
BranchRestriction restrict_cone_residue(const ConeSection& s);

struct ConeOptions {
  // Maximal total degree a+b+c of the monomial coefficients u^a v^b w^c
  // (and x^a y^b on the smooth side) entering the restriction spaces.
  int degree_cutoff = 12;
};

// Largest pole of restrict_cone over monomial coefficients at weight 2m.
int pole_bound_s2(int m, const ConeOptions& options = {});

// Largest pole of a common restriction of a SmoothPair section and a cone
// section at weight 2m, glued by (u, 0, 0) -> (u, 0).
int glued_pole_bound(int m, const ConeOptions& options = {});

}  // namespace ncsurf
