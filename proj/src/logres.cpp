#include "ncsurf/logres.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncsurf/errors.hpp"

namespace ncsurf {

namespace {

struct ChartData {
  std::vector<std::string> vars;
  std::vector<std::string> branches;
  std::string_view name;
};

ChartData chart_data(ChartKind kind) {
  switch (kind) {
    case ChartKind::NcPair: return {{"x", "y"}, {"x", "y"}, "nc-pair"};
    case ChartKind::SmoothPair: return {{"x", "y"}, {"y"}, "smooth-pair"};
    case ChartKind::HalfPlaneU: return {{"u1", "v1"}, {"u1"}, "half-plane-u"};
    case ChartKind::HalfPlaneV: return {{"u2", "v2"}, {"v2"}, "half-plane-v"};
  }
  throw std::logic_error("unhandled chart kind");
}

// Product of the branch variables: the generator is d(var0)^d(var1) / denominator.
LaurentPolynomial generator_denominator(const ChartModel& model) {
  LaurentPolynomial d = LaurentPolynomial::constant(model.vars(), 1);
  for (const auto& b : model.branches()) d = d * LaurentPolynomial::variable(model.vars(), b);
  return d;
}

// Residue of the generator along (z = 0): writing d(var0)^d(var1) = s dz^dt,
// the generator is s (dz/z)^dt * (z/denominator), whose residue is
// s * (z/denominator)|_{z=0} dt.
LaurentPolynomial generator_residue(const ChartModel& model, std::string_view z) {
  std::size_t zi = model.vars().index_of(z);
  Rational s = zi == 0 ? 1 : -1;
  LaurentPolynomial factor =
      LaurentPolynomial::variable(model.vars(), z) * generator_denominator(model).inverse();
  return s * restrict_var(factor, z);
}

BranchRestriction scaled(const BranchRestriction& r, const Rational& c) {
  return BranchRestriction(r.curve_var, c * r.h, r.form_weight);
}

// Embeds a univariate polynomial in `t` into a chart where `t` is one variable.
LaurentPolynomial extend_to_chart(const LaurentPolynomial& h, const VarList& chart,
                                  std::string_view t) {
  LaurentPolynomial image = LaurentPolynomial::variable(chart, t);
  return substitute(h, std::span<const LaurentPolynomial>(&image, 1), chart);
}

struct GluedBranch {
  std::string_view half_curve_var;  // coordinate on the half-plane branch
  std::string_view nc_branch;       // NcPair branch it is glued to
  std::string_view nc_curve_var;    // coordinate on that branch
};

constexpr GluedBranch kGlueU{"v1", "x", "y"};
constexpr GluedBranch kGlueV{"u2", "y", "x"};

}  // namespace

// ------------------------------------------------------------ ChartModel

ChartModel::ChartModel(ChartKind kind) : kind_(kind) {
  auto data = chart_data(kind);
  vars_ = VarList(data.vars);
  branches_ = data.branches;
}

bool ChartModel::has_branch(std::string_view var) const {
  return std::find(branches_.begin(), branches_.end(), var) != branches_.end();
}

std::string_view ChartModel::name() const { return chart_data(kind_).name; }

PluriSection::PluriSection(ChartModel model_, int weight_, LaurentPolynomial coeff_)
    : model(std::move(model_)), weight(weight_), coeff(std::move(coeff_)) {
  if (weight < 0) throw std::invalid_argument("section weight must be nonnegative");
  if (!(coeff.vars() == model.vars()))
    throw VariableMismatch("coefficient is not in the chart of " + std::string(model.name()));
}

PluriSection::PluriSection(ChartKind kind, int weight_, std::string_view coeff_)
    : PluriSection(ChartModel(kind), weight_,
                   LaurentPolynomial::parse(ChartModel(kind).vars(), coeff_)) {}

BranchRestriction::BranchRestriction(std::string curve_var_, LaurentPolynomial h_,
                                     int form_weight_)
    : curve_var(std::move(curve_var_)), h(std::move(h_)), form_weight(form_weight_), pole_order(0) {
  if (h.vars().size() != 1 || h.vars()[0] != curve_var)
    throw VariableMismatch("branch restriction must be univariate in " + curve_var);
  if (auto low = h.min_exponent(0); low && *low < 0) pole_order = -*low;
}

std::string BranchRestriction::to_string() const {
  std::string d = "(d" + curve_var + ")";
  if (form_weight != 1) d += "^" + std::to_string(form_weight);
  return "(" + h.to_string() + ")*" + d;
}

// ---------------------------------------------------------- restriction

BranchRestriction restrict(const PluriSection& s, std::string_view branch_var) {
  if (!s.model.has_branch(branch_var)) {
    throw std::invalid_argument(std::string(branch_var) + " = 0 is not a branch of the " +
                                std::string(s.model.name()) + " curve");
  }
  LaurentPolynomial coeff = restrict_var(s.coeff, branch_var);
  LaurentPolynomial gen = generator_residue(s.model, branch_var);
  LaurentPolynomial h = coeff * gen.pow(static_cast<unsigned>(s.weight));
  std::string curve = h.vars()[0];
  return BranchRestriction(std::move(curve), std::move(h), s.weight);
}

BranchRestriction pullback_sigma(const BranchRestriction& r) {
  const GluedBranch* g = nullptr;
  if (r.curve_var == kGlueU.half_curve_var) g = &kGlueU;
  if (r.curve_var == kGlueV.half_curve_var) g = &kGlueV;
  if (!g) throw std::invalid_argument("pullback_sigma expects a half-plane branch restriction");

  ChartModel nc(ChartKind::NcPair);
  VarList line{std::string(g->nc_curve_var)};
  // eta restricted to the glued branch, as a multiple of d(t).
  LaurentPolynomial eta = restrict(PluriSection(nc, 1, LaurentPolynomial::constant(nc.vars(), 1)),
                                   g->nc_branch).h;
  // The gluing identifies coordinates, so d(t_half) = d(t_nc) = (1/eta) * eta.
  LaurentPolynomial dt_over_eta = eta.inverse();
  auto m = static_cast<unsigned>(r.form_weight);
  LaurentPolynomial h = rename(r.h, line) * dt_over_eta.pow(m) * eta.pow(m);
  return BranchRestriction(line[0], std::move(h), r.form_weight);
}

bool glues(const PluriSection& nc, const PluriSection& half_u, const PluriSection& half_v) {
  if (nc.model.kind() != ChartKind::NcPair || half_u.model.kind() != ChartKind::HalfPlaneU ||
      half_v.model.kind() != ChartKind::HalfPlaneV)
    throw std::invalid_argument("glues expects NcPair, HalfPlaneU, HalfPlaneV sections");
  if (nc.weight != half_u.weight || nc.weight != half_v.weight)
    throw std::invalid_argument("glued sections must have equal weight");
  Rational sign = nc.weight % 2 == 0 ? 1 : -1;
  return restrict(nc, "x") == scaled(pullback_sigma(restrict(half_u, "u1")), sign) &&
         restrict(nc, "y") == scaled(pullback_sigma(restrict(half_v, "v2")), sign);
}

std::optional<std::pair<PluriSection, PluriSection>> gluing_partners(const PluriSection& nc) {
  if (nc.model.kind() != ChartKind::NcPair)
    throw std::invalid_argument("gluing_partners expects an NcPair section");
  int m = nc.weight;
  Rational sign = m % 2 == 0 ? 1 : -1;

  auto partner = [&](ChartKind kind, std::string_view half_branch, const GluedBranch& g)
      -> std::optional<PluriSection> {
    ChartModel half(kind);
    BranchRestriction target = scaled(restrict(nc, g.nc_branch), sign);
    // Restriction-then-pullback multiplies the branch coefficient by a unit.
    LaurentPolynomial unit =
        pullback_sigma(restrict(PluriSection(half, m, LaurentPolynomial::constant(half.vars(), 1)),
                                half_branch))
            .h;
    LaurentPolynomial branch_coeff =
        rename(target.h * unit.inverse(), VarList{std::string(g.half_curve_var)});
    if (!branch_coeff.is_polynomial()) return std::nullopt;
    return PluriSection(half, m, extend_to_chart(branch_coeff, half.vars(), g.half_curve_var));
  };

  auto su = partner(ChartKind::HalfPlaneU, "u1", kGlueU);
  auto sv = partner(ChartKind::HalfPlaneV, "v2", kGlueV);
  if (!su || !sv) return std::nullopt;
  return std::pair{std::move(*su), std::move(*sv)};
}

bool admissible(const LaurentPolynomial& f, int m) {
  PluriSection nc(ChartModel(ChartKind::NcPair), m, f);
  auto partners = gluing_partners(nc);
  return partners && glues(nc, partners->first, partners->second);
}

MonomialIdeal gluing_ideal(int m) {
  if (m < 1) throw std::invalid_argument("gluing_ideal needs m >= 1");
  ChartModel nc(ChartKind::NcPair);
  // Branch conditions only involve exponents up to m in each variable, so
  // minimal admissible monomials lie in the box [0, m+1]^2.
  std::vector<ExponentVector> admissible_monos;
  for (int a = 0; a <= m + 1; ++a) {
    for (int b = 0; b <= m + 1; ++b) {
      ExponentVector e{a, b};
      if (admissible(LaurentPolynomial::monomial(nc.vars(), e), m)) admissible_monos.push_back(e);
    }
  }
  return minimalize(std::move(admissible_monos), 2);
}

// ------------------------------------------------------------- embedding

namespace {

const std::array<std::array<std::string_view, 2>, 3> kPlaneVars{{{"x", "y"}, {"u1", "v1"}, {"u2", "v2"}}};

std::optional<CoordinatePlane> plane_of(const PlaneMap& map) {
  std::array<int, 2> seen{0, 0};
  std::vector<int> nonzero;
  for (int k = 0; k < 4; ++k) {
    const auto& p = map[static_cast<std::size_t>(k)];
    if (p.source < 0) continue;
    if (p.source > 1 || (p.sign != 1 && p.sign != -1)) return std::nullopt;
    ++seen[static_cast<std::size_t>(p.source)];
    nonzero.push_back(k);
  }
  if (nonzero.size() != 2 || seen[0] != 1 || seen[1] != 1) return std::nullopt;
  return CoordinatePlane{nonzero[0], nonzero[1]};
}

// Coefficient vector of the image of the line (source variable = t, other = 0).
std::array<int, 4> line_image(const PlaneMap& map, int source) {
  std::array<int, 4> out{};
  for (std::size_t k = 0; k < 4; ++k)
    if (map[k].source == source) out[k] = map[k].sign;
  return out;
}

}  // namespace

std::string EmbeddingAssignment::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < 3; ++p) {
    if (p) out += "; ";
    out += "(" + std::string(kPlaneVars[p][0]) + "," + std::string(kPlaneVars[p][1]) + ")->(";
    for (std::size_t k = 0; k < 4; ++k) {
      if (k) out += ",";
      const auto& s = planes[p][k];
      if (s.source < 0) {
        out += "0";
      } else {
        if (s.sign < 0) out += "-";
        out += kPlaneVars[p][static_cast<std::size_t>(s.source)];
      }
    }
    out += ")";
  }
  return out;
}

std::string EmbeddingVerdict::to_string() const {
  auto b = [](bool v) { return v ? "yes" : "no"; };
  return std::string("coordinate-planes=") + b(coordinate_planes) + " distinct=" + b(distinct) +
         " glued-points-agree=" + b(glued_points_agree) +
         " no-extra-identification=" + b(no_extra_identification);
}

EmbeddingVerdict embed_verdict(const EmbeddingAssignment& a) {
  EmbeddingVerdict v;
  std::array<std::optional<CoordinatePlane>, 3> planes{plane_of(a.planes[0]), plane_of(a.planes[1]),
                                                       plane_of(a.planes[2])};
  v.coordinate_planes = planes[0] && planes[1] && planes[2];
  if (v.coordinate_planes) {
    v.distinct = *planes[0] != *planes[1] && *planes[0] != *planes[2] && *planes[1] != *planes[2];
    auto [p1, p2] = *planes[1];
    auto [q1, q2] = *planes[2];
    v.no_extra_identification = p1 != q1 && p1 != q2 && p2 != q1 && p2 != q2;
  }
  // (0, y) ~ (u1, v1) = (0, y) and (x, 0) ~ (u2, v2) = (x, 0).
  v.glued_points_agree = line_image(a.planes[0], 1) == line_image(a.planes[1], 1) &&
                         line_image(a.planes[0], 0) == line_image(a.planes[2], 0);
  return v;
}

bool embed_check(const EmbeddingAssignment& a) { return embed_verdict(a).ok(); }

EmbeddingAssignment printed_assignment() {
  constexpr SignedPlacement zero{-1, 1}, first{0, 1}, second{1, 1};
  return EmbeddingAssignment{{{
      {zero, first, second, zero},
      {second, first, zero, zero},
      {zero, zero, second, first},
  }}};
}

std::vector<CoordinatePlane> all_coordinate_planes() {
  std::vector<CoordinatePlane> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out.emplace_back(i, j);
  return out;
}

std::optional<EmbeddingAssignment> embed_search(const std::vector<CoordinatePlane>& candidates) {
  // Every placement of one chart onto one candidate plane, in a fixed order.
  std::vector<PlaneMap> maps;
  for (const auto& [i, j] : candidates) {
    for (int swap = 0; swap < 2; ++swap) {
      for (int s0 : {1, -1}) {
        for (int s1 : {1, -1}) {
          PlaneMap map;
          for (auto& p : map) p = SignedPlacement{-1, 1};
          map[static_cast<std::size_t>(swap ? j : i)] = SignedPlacement{0, s0};
          map[static_cast<std::size_t>(swap ? i : j)] = SignedPlacement{1, s1};
          maps.push_back(map);
        }
      }
    }
  }
  for (const auto& a : maps)
    for (const auto& b : maps)
      for (const auto& c : maps) {
        EmbeddingAssignment candidate{{a, b, c}};
        if (embed_check(candidate)) return candidate;
      }
  return std::nullopt;
}

}  // namespace ncsurf
