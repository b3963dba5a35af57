#include "ncsurf/geomcheck.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncsurf/errors.hpp"

namespace ncsurf {

WeightedHyperellipticCurve::WeightedHyperellipticCurve(BinaryForm branch_form)
    : f_(std::move(branch_form)) {
  if (f_.degree() < 2 || f_.degree() % 2 != 0)
    throw std::invalid_argument("branch form must have even degree >= 2");
}

int fixed_points(const WeightedHyperellipticCurve& c) {
  if (!is_squarefree(c.branch_form()))
    throw NotSquarefree("branch form " + c.branch_form().to_string() + " is not squarefree");
  return distinct_roots(c.branch_form());
}

int node_count(const WeightedHyperellipticCurve& c, const WeightedHyperellipticCurve& e) {
  return fixed_points(c) * fixed_points(e);
}

int nodes_over(const WeightedHyperellipticCurve& c, const WeightedHyperellipticCurve& e,
               const Rational& x, const Rational& y) {
  if (x == 0 && y == 0) throw std::invalid_argument("(0 : 0) is not a point of P^1");
  return e.fixed_over(x, y) ? fixed_points(c) : 0;
}

bool sigma_node_disjoint(const BinaryForm& f, const std::string& a, const std::string& b) {
  return no_common_root(f, BinaryForm(swap_vars(f.poly(), a, b)));
}

bool no_common_root(const BinaryForm& f, const BinaryForm& g) { return !common_root_p1(f, g); }

bool product_ample(const ProductSurfaceClass& c) { return c.d1 > 0 && c.d2 > 0; }

ProductSurfaceClass log_canonical_bidegree(int genus_c, int genus_e, int boundary_fibres) {
  return {2L * genus_c - 2, 2L * genus_e - 2 + boundary_fibres};
}

long h0_p1(long d) { return std::max(d + 1, 0L); }

EllipticInstance elliptic_instance() {
  ECCurve curve(-1, 0);
  return EllipticInstance{
      curve,
      {ECPoint::affine(curve, 0, 0), ECPoint::affine(curve, 1, 0)},
      {ECPoint::affine(curve, -1, 0), ECPoint::infinity()},
  };
}

IntersectionLattice fibred_lattice(int fibre_genus, long k_squared) {
  // Fibres: F^2 = 0, F_p . F_q = 0, adjunction K.F + F^2 = 2g - 2.
  long kf = 2L * fibre_genus - 2;
  return IntersectionLattice({"K0", "F_p", "F_q"},
                             {{k_squared, kf, kf}, {kf, 0, 0}, {kf, 0, 0}}, {1, 0, 0});
}

IntersectionLattice blown_up_fibred_lattice(int fibre_genus, long k_squared) {
  return fibred_lattice(fibre_genus, k_squared)
      .blowup({{"F_p", 1}}, "E_q1")
      .blowup({{"F_p", 1}}, "E_q2")
      .blowup({{"F_q", 1}}, "E_p1")
      .blowup({{"F_q", 1}}, "E_p2");
}

std::vector<std::string> fibred_boundary() {
  return {"F_p", "F_q", "E_p1", "E_p2", "E_q1", "E_q2"};
}

WeightedHyperellipticCurve sextic_curve() {
  return WeightedHyperellipticCurve(BinaryForm::parse(VarList{"x", "y"}, "x^6 + 2*y^6"));
}

WeightedHyperellipticCurve quartic_curve() {
  return WeightedHyperellipticCurve(BinaryForm::parse(VarList{"x", "y"}, "x^3*y + x*y^3"));
}

}  // namespace ncsurf
