#include "ncsurf/elliptic.hpp"

#include <stdexcept>

#include "ncsurf/laurent.hpp"

namespace ncsurf {

ECCurve::ECCurve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (4 * a_ * a_ * a_ + 27 * b_ * b_ == 0) throw std::invalid_argument("singular cubic");
}

bool ECCurve::contains(const Rational& x, const Rational& y) const {
  return y * y == x * x * x + a_ * x + b_;
}

std::string ECCurve::to_string() const {
  VarList x{"x"};
  LaurentPolynomial rhs = LaurentPolynomial::variable(x, "x", 3) +
                          a_ * LaurentPolynomial::variable(x, "x") + LaurentPolynomial::constant(x, b_);
  return "y^2 = " + rhs.to_string();
}

ECPoint ECPoint::affine(const ECCurve& curve, Rational x, Rational y) {
  if (!curve.contains(x, y))
    throw std::invalid_argument("(" + x.get_str() + ", " + y.get_str() + ") is not on " +
                                curve.to_string());
  return ECPoint(std::move(x), std::move(y));
}

std::string ECPoint::to_string() const {
  if (is_infinity()) return "inf";
  return "(" + x().get_str() + "," + y().get_str() + ")";
}

ECPoint ec_neg(const ECPoint& p) {
  if (p.is_infinity()) return p;
  return ECPoint(p.x(), -p.y());
}

ECPoint ec_add(const ECCurve& curve, const ECPoint& p, const ECPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational slope;
  if (p.x() == q.x()) {
    // Vertical chord, or tangent at a 2-torsion point.
    if (p.y() != q.y() || p.y() == 0) return ECPoint::infinity();
    slope = (3 * p.x() * p.x() + curve.a()) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return ECPoint(std::move(x3), std::move(y3));
}

ECPoint ec_mul(const ECCurve& curve, long k, const ECPoint& p) {
  ECPoint base = k < 0 ? ec_neg(p) : p;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  ECPoint acc = ECPoint::infinity();
  while (n) {
    if (n & 1ul) acc = ec_add(curve, acc, base);
    n >>= 1;
    if (n) base = ec_add(curve, base, base);
  }
  return acc;
}

bool linear_equiv(const ECCurve& curve, const ECPoint& p1, const ECPoint& p2, const ECPoint& q1,
                  const ECPoint& q2) {
  return ec_add(curve, p1, p2) == ec_add(curve, q1, q2);
}

}  // namespace ncsurf
