#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncsurf/laurent.hpp"
#include "ncsurf/rational.hpp"

namespace ncsurf {

// Dense univariate polynomial over Q, coefficients in ascending degree.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coeffs);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  const Rational& leading() const { return c_.back(); }
  Rational operator()(const Rational& x) const;

  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;

  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws ZeroInput on division by zero.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);
// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

// Nonzero homogeneous polynomial in two variables; roots live in P^1.
class BinaryForm {
 public:
  // Throws std::invalid_argument unless p is a nonzero homogeneous polynomial
  // in exactly two variables.
  explicit BinaryForm(LaurentPolynomial p);
  static BinaryForm parse(VarList vars, std::string_view text);

  const LaurentPolynomial& poly() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }

  // f(X, 1) as a univariate polynomial in the first variable.
  UnivariatePolynomial dehomogenize() const;
  // Multiplicity of the root (1 : 0).
  int multiplicity_at_infinity() const;
  // Coefficients of X^d, X^(d-1) Y, ..., Y^d.
  std::vector<Rational> coefficient_row() const;
  bool vanishes_at(const Rational& x, const Rational& y) const;
  std::string to_string() const { return p_.to_string(); }

 private:
  LaurentPolynomial p_;
  int degree_;
};

bool is_squarefree(const BinaryForm& f);
// Distinct roots in P^1.
int distinct_roots(const BinaryForm& f);
// Decided with the gcd of dehomogenizations plus the point at infinity.
bool common_root_p1(const BinaryForm& f, const BinaryForm& g);
// Sylvester resultant of two binary forms; zero iff they share a root in P^1.
Rational resultant(const BinaryForm& f, const BinaryForm& g);

}  // namespace ncsurf
