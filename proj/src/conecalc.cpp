#include "ncsurf/conecalc.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ncsurf/errors.hpp"
#include "ncsurf/linear_span.hpp"

namespace ncsurf {

const VarList& cone_vars() {
  static const VarList vars{"u", "v"};
  return vars;
}

const VarList& chart_vars() {
  static const VarList vars{"s", "t"};
  return vars;
}

namespace {

LaurentPolynomial cone_var(std::string_view name, int power = 1) {
  return LaurentPolynomial::variable(cone_vars(), name, power);
}

LaurentPolynomial uv() { return cone_var("u") * cone_var("v"); }

// u -> s^2, v -> t^2 (w -> st is applied by the caller).
std::array<LaurentPolynomial, 2> chart_images() {
  return {LaurentPolynomial::variable(chart_vars(), "s", 2),
          LaurentPolynomial::variable(chart_vars(), "t", 2)};
}

LaurentPolynomial chart_w() {
  return LaurentPolynomial::variable(chart_vars(), "s") *
         LaurentPolynomial::variable(chart_vars(), "t");
}

}  // namespace

// ------------------------------------------------------------ ConeElement

ConeElement::ConeElement(LaurentPolynomial c0, LaurentPolynomial c1)
    : c0_(std::move(c0)), c1_(std::move(c1)) {
  if (!(c0_.vars() == cone_vars()) || !(c1_.vars() == cone_vars()))
    throw VariableMismatch("cone element parts must live in (u, v)");
}

ConeElement ConeElement::constant(const Rational& c) {
  return {LaurentPolynomial::constant(cone_vars(), c), LaurentPolynomial(cone_vars())};
}

ConeElement ConeElement::u() { return {cone_var("u"), LaurentPolynomial(cone_vars())}; }
ConeElement ConeElement::v() { return {cone_var("v"), LaurentPolynomial(cone_vars())}; }
ConeElement ConeElement::w() {
  return {LaurentPolynomial(cone_vars()), LaurentPolynomial::constant(cone_vars(), 1)};
}

ConeElement ConeElement::monomial(int a, int b, int c) {
  if (c < 0) throw std::invalid_argument("w cannot carry a negative exponent");
  LaurentPolynomial base = LaurentPolynomial::monomial(cone_vars(), ExponentVector{a, b}) *
                           uv().pow(static_cast<unsigned>(c / 2));
  if (c % 2 == 0) return {base, LaurentPolynomial(cone_vars())};
  return {LaurentPolynomial(cone_vars()), base};
}

ConeElement ConeElement::parse(std::string_view text) {
  VarList full{"u", "v", "w"};
  LaurentPolynomial p = LaurentPolynomial::parse(full, text);
  ConeElement out;
  for (const auto& [e, c] : p.terms()) {
    ConeElement term = monomial(e[0], e[1], e[2]);
    out = out + ConeElement(c * term.c0_, c * term.c1_);
  }
  return out;
}

ConeElement ConeElement::pow(unsigned k) const {
  ConeElement result = constant(1);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string ConeElement::to_string() const {
  if (c1_.is_zero()) return c0_.to_string();
  std::string w = c1_.is_constant() && c1_.coefficient(ExponentVector{0, 0}) == 1
                      ? "w"
                      : "(" + c1_.to_string() + ")*w";
  if (c0_.is_zero()) return w;
  return c0_.to_string() + " + " + w;
}

ConeElement operator+(const ConeElement& a, const ConeElement& b) {
  return {a.c0_ + b.c0_, a.c1_ + b.c1_};
}

ConeElement operator-(const ConeElement& a, const ConeElement& b) {
  return {a.c0_ - b.c0_, a.c1_ - b.c1_};
}

ConeElement operator*(const ConeElement& a, const ConeElement& b) {
  return {a.c0_ * b.c0_ + a.c1_ * b.c1_ * uv(), a.c0_ * b.c1_ + a.c1_ * b.c0_};
}

// ----------------------------------------------------------- ChartElement

ChartElement::ChartElement(LaurentPolynomial p) : p_(std::move(p)) {
  if (!(p_.vars() == chart_vars())) throw VariableMismatch("chart element must live in (s, t)");
  for (const auto& [e, c] : p_.terms())
    if (e.total_degree() % 2 != 0)
      throw std::invalid_argument("chart element is not invariant under (s,t) -> (-s,-t)");
}

ChartElement to_chart(const ConeElement& e) {
  auto images = chart_images();
  LaurentPolynomial p = substitute(e.c0(), images, chart_vars()) +
                        substitute(e.c1(), images, chart_vars()) * chart_w();
  return ChartElement(std::move(p));
}

int mult_along_C2(const ConeElement& e) {
  if (e.is_zero()) throw ZeroInput("the zero element has no vanishing order");
  return *to_chart(e).poly().min_exponent(1);
}

// ------------------------------------------------------------ restriction

ConeSection::ConeSection(int weight_, ConeElement coeff_) : weight(weight_), coeff(std::move(coeff_)) {
  if (weight < 0 || weight % 2 != 0)
    throw std::invalid_argument("cone sections carry a nonnegative even weight");
}

namespace {

// s^(2k) -> u^k on C2.
LaurentPolynomial s_to_u(const LaurentPolynomial& h) {
  static const VarList u_line{"u"};
  LaurentPolynomial::TermMap t;
  for (const auto& [e, c] : h.terms()) {
    if (e[0] % 2 != 0) throw std::logic_error("restriction to C2 is not a function of u");
    t.emplace(ExponentVector{e[0] / 2}, c);
  }
  return LaurentPolynomial(u_line, std::move(t));
}

}  // namespace

BranchRestriction restrict_cone(const ConeSection& s) {
  const VarList& chart = chart_vars();
  const auto m = static_cast<unsigned>(s.half_weight());
  auto [U, V] = chart_images();
  LaurentPolynomial W = chart_w();

  // du^dw = jac ds^dt.
  LaurentPolynomial jac = derivative(U, "s") * derivative(W, "t") - derivative(U, "t") * derivative(W, "s");
  LaurentPolynomial generator = jac * U.inverse();  // du^dw/u in units of ds^dt
  LaurentPolynomial t = LaurentPolynomial::variable(chart, "t");

  // Coefficient of (ds^dt / t)^(2m).
  LaurentPolynomial g = to_chart(s.coeff).poly() * generator.pow(2 * m) * V.inverse().pow(m) *
                        t.pow(2 * m);

  // ds^dt/t = -(dt/t)^ds has residue -ds along t = 0.
  LaurentPolynomial on_curve(VarList{"s"});
  try {
    on_curve = restrict_var(g, "t");
  } catch (const NegativeExponentAtRestriction&) {
    throw IllegalPole("coefficient " + s.coeff.to_string() + " has a pole along C2 at weight " +
                      std::to_string(s.weight));
  }
  Rational residue_sign = 1;  // (-1)^(2m)

  // du = (du/ds) ds on C2.
  LaurentPolynomial du_ds = restrict_var(derivative(U, "s"), "t");
  LaurentPolynomial h = residue_sign * on_curve * du_ds.inverse().pow(2 * m);
  return BranchRestriction("u", s_to_u(h), s.weight);
}

BranchRestriction restrict_cone_residue(const ConeSection& s) {
  const auto m = static_cast<unsigned>(s.half_weight());
  // du^dw/u = -(w/u) (dw^du/w); the sign disappears in even powers.
  ConeElement u_inv(cone_var("u", -1), LaurentPolynomial(cone_vars()));
  ConeElement v_inv(cone_var("v", -1), LaurentPolynomial(cone_vars()));
  ConeElement k = s.coeff * (ConeElement::w() * u_inv).pow(2 * m) * v_inv.pow(m);

  // Along C2 the form dw^du/w has residue du and w restricts to 0.
  auto on_c2 = [&](const LaurentPolynomial& p) {
    try {
      return restrict_var(p, "v");
    } catch (const NegativeExponentAtRestriction&) {
      throw IllegalPole("coefficient " + s.coeff.to_string() + " has a pole along C2");
    }
  };
  on_c2(k.c1());
  return BranchRestriction("u", on_c2(k.c0()), s.weight);
}

// ----------------------------------------------------------- pole bounds

namespace {

void require_cutoff(const ConeOptions& options) {
  if (options.degree_cutoff < 0) throw std::invalid_argument("degree cutoff must be nonnegative");
}

PolynomialSpan cone_restriction_space(int m, const ConeOptions& options, const VarList& line) {
  PolynomialSpan span(line);
  for (int a = 0; a <= options.degree_cutoff; ++a)
    for (int b = 0; a + b <= options.degree_cutoff; ++b)
      for (int c = 0; c <= 1 && a + b + c <= options.degree_cutoff; ++c)
        span.insert(rename(restrict_cone(ConeSection(2 * m, ConeElement::monomial(a, b, c))).h, line));
  return span;
}

}  // namespace

int pole_bound_s2(int m, const ConeOptions& options) {
  if (m < 0) throw std::invalid_argument("pole_bound_s2 needs m >= 0");
  require_cutoff(options);
  int bound = 0;
  for (int a = 0; a <= options.degree_cutoff; ++a)
    for (int b = 0; a + b <= options.degree_cutoff; ++b)
      for (int c = 0; c <= 1 && a + b + c <= options.degree_cutoff; ++c)
        bound = std::max(bound,
                         restrict_cone(ConeSection(2 * m, ConeElement::monomial(a, b, c))).pole_order);
  return bound;
}

int glued_pole_bound(int m, const ConeOptions& options) {
  if (m < 0) throw std::invalid_argument("glued_pole_bound needs m >= 0");
  require_cutoff(options);
  VarList line{"x"};
  ChartModel smooth(ChartKind::SmoothPair);

  PolynomialSpan smooth_side(line);
  for (int a = 0; a <= options.degree_cutoff; ++a)
    for (int b = 0; a + b <= options.degree_cutoff; ++b) {
      PluriSection sec(smooth, 2 * m, LaurentPolynomial::monomial(smooth.vars(), ExponentVector{a, b}));
      smooth_side.insert(restrict(sec, "y").h);
    }

  // The gluing (u, 0, 0) -> (u, 0) identifies the coordinate u with x.
  PolynomialSpan cone_side = cone_restriction_space(m, options, line);
  auto low = intersect(smooth_side, cone_side).lowest_exponent(0);
  return low ? std::max(0, -*low) : 0;
}

}  // namespace ncsurf
