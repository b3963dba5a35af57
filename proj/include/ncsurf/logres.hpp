#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncsurf/laurent.hpp"
#include "ncsurf/monideal.hpp"

namespace ncsurf {

// Local plane charts carrying a log canonical generator.
enum class ChartKind {
  NcPair,      // (x, y), curve xy = 0, generator dx^dy/(xy)
  SmoothPair,  // (x, y), curve y = 0,  generator dx^dy/y
  HalfPlaneU,  // (u1, v1), curve u1 = 0, generator du1^dv1/u1
  HalfPlaneV,  // (u2, v2), curve v2 = 0, generator du2^dv2/v2
};

class ChartModel {
 public:
  explicit ChartModel(ChartKind kind);

  ChartKind kind() const noexcept { return kind_; }
  const VarList& vars() const noexcept { return vars_; }
  // Variables whose vanishing defines a branch of the boundary curve.
  const std::vector<std::string>& branches() const noexcept { return branches_; }
  bool has_branch(std::string_view var) const;
  std::string_view name() const;

  friend bool operator==(const ChartModel& a, const ChartModel& b) { return a.kind_ == b.kind_; }

 private:
  ChartKind kind_;
  VarList vars_;
  std::vector<std::string> branches_;
};

// coeff * (generator of the chart)^weight.
struct PluriSection {
  ChartModel model;
  int weight;
  LaurentPolynomial coeff;

  // Throws VariableMismatch if coeff is not in the model's chart, and
  // std::invalid_argument for a negative weight.
  PluriSection(ChartModel model, int weight, LaurentPolynomial coeff);
  // Parses the coefficient in the model's chart.
  PluriSection(ChartKind kind, int weight, std::string_view coeff);
};

// h(t) (dt)^form_weight on a curve branch with coordinate t.
struct BranchRestriction {
  std::string curve_var;
  LaurentPolynomial h;  // univariate in curve_var
  int form_weight;
  int pole_order;       // max(0, -lowest exponent of h)

  BranchRestriction(std::string curve_var, LaurentPolynomial h, int form_weight);
  std::string to_string() const;

  friend bool operator==(const BranchRestriction& a, const BranchRestriction& b) {
    return a.curve_var == b.curve_var && a.h == b.h && a.form_weight == b.form_weight;
  }
};

// Poincare residue restriction of a section to the branch (var = 0),
// normalized to h(t) (dt)^m. Throws NegativeExponentAtRestriction and
// std::invalid_argument for a branch outside the model's curve.
BranchRestriction restrict(const PluriSection& s, std::string_view branch_var);

// Pullback along the gluing map of the triple-point model: the u1 = 0 branch
// is glued to (x = 0) by v1 = y and the v2 = 0 branch to (y = 0) by u2 = x.
// Input must come from a HalfPlaneU or HalfPlaneV restriction.
BranchRestriction pullback_sigma(const BranchRestriction& r);

// Gluing condition: branch restrictions of the NcPair section agree with
// (-1)^m times the pulled-back half-plane restrictions.
bool glues(const PluriSection& nc, const PluriSection& half_u, const PluriSection& half_v);

// Holomorphic half-plane sections that glue with `nc`, if any exist.
std::optional<std::pair<PluriSection, PluriSection>> gluing_partners(const PluriSection& nc);

// True iff the NcPair coefficient f admits holomorphic partners at weight m.
bool admissible(const LaurentPolynomial& f, int m);

// Ideal of NcPair coefficients admitting partners at weight m, computed from
// the branch-divisibility conditions monomial by monomial.
MonomialIdeal gluing_ideal(int m);

// --------------------------------------------------------------- embedding

// Coordinate of C^4 written as a signed chart variable (or 0).
struct SignedPlacement {
  int source = -1;  // -1 for the zero coordinate, else 0 or 1 (first/second chart var)
  int sign = 1;
  friend bool operator==(const SignedPlacement&, const SignedPlacement&) = default;
};

using PlaneMap = std::array<SignedPlacement, 4>;

// Images of the planes (x,y), (u1,v1), (u2,v2) in C^4, in that order.
struct EmbeddingAssignment {
  std::array<PlaneMap, 3> planes;
  std::string to_string() const;
  friend bool operator==(const EmbeddingAssignment&, const EmbeddingAssignment&) = default;
};

// Coordinate 2-plane of C^4 given by the indices (0-based) of its two
// nonzero coordinates, i < j.
using CoordinatePlane = std::pair<int, int>;

struct EmbeddingVerdict {
  bool coordinate_planes = false;  // each image is a coordinate 2-plane
  bool distinct = false;           // the three images are pairwise distinct
  bool glued_points_agree = false; // identified branch points have equal images
  bool no_extra_identification = false;  // the two half-plane images meet only at 0
  bool ok() const {
    return coordinate_planes && distinct && glued_points_agree && no_extra_identification;
  }
  std::string to_string() const;
};

EmbeddingVerdict embed_verdict(const EmbeddingAssignment& a);
bool embed_check(const EmbeddingAssignment& a);

// The maps (x,y) -> (0,x,y,0), (u1,v1) -> (v1,u1,0,0), (u2,v2) -> (0,0,v2,u2).
EmbeddingAssignment printed_assignment();

std::vector<CoordinatePlane> all_coordinate_planes();

// Exhaustive search over signed placements of the three planes onto the
// candidate coordinate planes; returns the first passing assignment in a
// fixed order.
std::optional<EmbeddingAssignment> embed_search(
    const std::vector<CoordinatePlane>& candidates = all_coordinate_planes());

}  // namespace ncsurf
