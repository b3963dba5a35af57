#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncsurf/binary_form.hpp"
#include "ncsurf/elliptic.hpp"
#include "ncsurf/lattice.hpp"

namespace ncsurf {

// Double cover z^2 = f(x, y) of P^1 branched at the roots of f.
class WeightedHyperellipticCurve {
 public:
  // Throws std::invalid_argument unless deg f is even and at least 2.
  explicit WeightedHyperellipticCurve(BinaryForm branch_form);

  const BinaryForm& branch_form() const noexcept { return f_; }
  int genus() const noexcept { return f_.degree() / 2 - 1; }
  // A point (x : y) of P^1 is fixed by the involution iff f vanishes there.
  bool fixed_over(const Rational& x, const Rational& y) const { return f_.vanishes_at(x, y); }

 private:
  BinaryForm f_;
};

// Number of fixed points of the involution. Throws NotSquarefree.
int fixed_points(const WeightedHyperellipticCurve& c);

// Nodes of (C x E)/(tau_C, tau_E): pairs of fixed points.
int node_count(const WeightedHyperellipticCurve& c, const WeightedHyperellipticCurve& e);

// Nodes on the image of C x {(x : y)}; zero unless (x : y) is fixed on E.
int nodes_over(const WeightedHyperellipticCurve& c, const WeightedHyperellipticCurve& e,
               const Rational& x, const Rational& y);

// True iff f and f with variables a, b exchanged have no common root in P^1.
bool sigma_node_disjoint(const BinaryForm& f, const std::string& a, const std::string& b);
// True iff two forms have no common root in P^1.
bool no_common_root(const BinaryForm& f, const BinaryForm& g);

// Degrees of a line bundle on C x E restricted to C x pt and pt x E.
struct ProductSurfaceClass {
  long d1 = 0;
  long d2 = 0;
  friend bool operator==(const ProductSurfaceClass&, const ProductSurfaceClass&) = default;
};

bool product_ample(const ProductSurfaceClass& c);

// Pullback of K + (sum of n fibres over points of E) to C x E.
ProductSurfaceClass log_canonical_bidegree(int genus_c, int genus_e, int boundary_fibres);

// dim H^0(P^1, O(d)).
long h0_p1(long d);

// ------------------------------------------------------ worked instances

// y^2 = x^3 - x with p = (0,0), (1,0) and q = (-1,0), inf: a concrete
// configuration with p1 + p2 ~ q1 + q2.
struct EllipticInstance {
  ECCurve curve;
  std::array<ECPoint, 2> p;
  std::array<ECPoint, 2> q;
};
EllipticInstance elliptic_instance();

// Lattice of a surface fibred in curves of arithmetic genus `fibre_genus`
// with two fibres F_p, F_q, after blowing up two points on each:
// q1, q2 on F_p give E_q1, E_q2 and p1, p2 on F_q give E_p1, E_p2.
// `k_squared` only enters pairings of K with itself.
IntersectionLattice fibred_lattice(int fibre_genus = 2, long k_squared = 0);
IntersectionLattice blown_up_fibred_lattice(int fibre_genus = 2, long k_squared = 0);
std::vector<std::string> fibred_boundary();

// C: z^2 = x^6 + 2y^6 and E: z^2 = xy(x^2 + y^2).
WeightedHyperellipticCurve sextic_curve();
WeightedHyperellipticCurve quartic_curve();

}  // namespace ncsurf
