#pragma once

#include <optional>
#include <string>

#include "ncsurf/rational.hpp"

namespace ncsurf {

// y^2 = x^3 + a x + b over Q.
class ECCurve {
 public:
  // Throws std::invalid_argument when 4a^3 + 27b^2 = 0.
  ECCurve(Rational a, Rational b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool contains(const Rational& x, const Rational& y) const;
  std::string to_string() const;

 private:
  Rational a_, b_;
};

class ECPoint {
 public:
  static ECPoint infinity() { return ECPoint(); }
  // Throws std::invalid_argument if (x, y) is not on the curve.
  static ECPoint affine(const ECCurve& curve, Rational x, Rational y);

  bool is_infinity() const noexcept { return !coords_; }
  const Rational& x() const { return coords_->first; }
  const Rational& y() const { return coords_->second; }
  std::string to_string() const;

  friend bool operator==(const ECPoint&, const ECPoint&) = default;

 private:
  friend ECPoint ec_neg(const ECPoint& p);
  friend ECPoint ec_add(const ECCurve& curve, const ECPoint& p, const ECPoint& q);

  ECPoint() = default;
  ECPoint(Rational x, Rational y) : coords_(std::in_place, std::move(x), std::move(y)) {}
  std::optional<std::pair<Rational, Rational>> coords_;
};

ECPoint ec_neg(const ECPoint& p);
// Chord-tangent addition; the point at infinity is the identity.
ECPoint ec_add(const ECCurve& curve, const ECPoint& p, const ECPoint& q);
ECPoint ec_mul(const ECCurve& curve, long k, const ECPoint& p);

// p1 + p2 ~ q1 + q2 as divisors, decided by p1 (+) p2 = q1 (+) q2.
bool linear_equiv(const ECCurve& curve, const ECPoint& p1, const ECPoint& p2, const ECPoint& q1,
                  const ECPoint& q2);

}  // namespace ncsurf
