#include "ncsurf/monideal.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ncsurf/errors.hpp"

namespace ncsurf {

namespace {

bool generator_order(const ExponentVector& a, const ExponentVector& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a > b;
}

}  // namespace

// ---------------------------------------------------------- MonomialIdeal

MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw std::invalid_argument("generator has wrong number of variables");
    if (!g.nonnegative()) throw std::invalid_argument("monomial ideal generator with negative exponent");
  }
  // After sorting by degree, a generator can only be divided by one placed before it.
  std::sort(gens.begin(), gens.end(), generator_order);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal ideal(nvars);
  for (auto& g : gens) {
    bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                 [&](const ExponentVector& h) { return divides(h, g); });
    if (!redundant) ideal.gens_.push_back(std::move(g));
  }
  return ideal;
}

bool MonomialIdeal::contains(const ExponentVector& mono) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return divides(g, mono); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

bool member(const ExponentVector& mono, const MonomialIdeal& ideal) {
  return ideal.contains(mono);
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw VariableMismatch("ideals in different rings");
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g + h);
  return minimalize(std::move(gens), a.nvars());
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw VariableMismatch("ideals in different rings");
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(gens), a.nvars());
}

std::string to_string(const ExponentVector& mono, const VarList& vars) {
  return LaurentPolynomial::monomial(vars, mono).to_string();
}

std::string to_string(const MonomialIdeal& ideal, const VarList& vars) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i], vars);
  }
  return out + ")";
}

std::string to_string(const std::vector<ExponentVector>& monos, const VarList& vars) {
  std::string out = "{";
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (i) out += ", ";
    out += to_string(monos[i], vars);
  }
  return out + "}";
}

// --------------------------------------------------- GradedMonomialFamily

std::string AffineExponent::to_string() const {
  if (slope == 0) return std::to_string(offset);
  std::string s = slope == 1 ? "m" : std::to_string(slope) + "*m";
  if (offset > 0) s += "+" + std::to_string(offset);
  if (offset < 0) s += "-" + std::to_string(-offset);
  return s;
}

GradedMonomialFamily::GradedMonomialFamily(VarList vars, std::vector<MonomialTemplate> templates)
    : vars_(std::move(vars)), templates_(std::move(templates)) {
  for (const auto& t : templates_) {
    if (t.exponents.size() != vars_.size())
      throw std::invalid_argument("template arity does not match family variables");
    for (const auto& a : t.exponents)
      if (a.slope < 0) throw std::invalid_argument("affine exponent slope must be nonnegative");
  }
}

std::vector<ExponentVector> GradedMonomialFamily::raw_generators(int m) const {
  std::vector<ExponentVector> gens;
  gens.reserve(templates_.size());
  for (const auto& t : templates_) {
    ExponentVector e(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      long v = t.exponents[i].eval(m);
      if (v < 0) {
        throw NegativeExponent("exponent " + t.exponents[i].to_string() + " of " + vars_[i] +
                               " is negative at m = " + std::to_string(m));
      }
      e[i] = static_cast<int>(v);
    }
    gens.push_back(std::move(e));
  }
  return gens;
}

void GradedMonomialFamily::validate(int lo, int hi) const {
  // Affine with nonnegative slope: the minimum over [lo, hi] sits at lo.
  if (lo <= hi) raw_generators(lo);
}

std::string GradedMonomialFamily::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < templates_.size(); ++k) {
    if (k) out << ", ";
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& a = templates_[k].exponents[i];
      if (a.slope == 0 && a.offset == 0) continue;
      if (a.slope == 0 && a.offset == 1) {
        factors.push_back(vars_[i]);
      } else if (a.slope == 0 || (a.offset == 0 && a.slope == 1)) {
        factors.push_back(vars_[i] + "^" + a.to_string());
      } else {
        factors.push_back(vars_[i] + "^(" + a.to_string() + ")");
      }
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

MonomialIdeal instantiate(const GradedMonomialFamily& family, int m) {
  return minimalize(family.raw_generators(m), family.vars().size());
}

// ------------------------------------------------------ Rees bookkeeping

namespace {

// Cached I_1..I_n.
std::vector<MonomialIdeal> components(const GradedMonomialFamily& family, int n) {
  std::vector<MonomialIdeal> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)) + 1);
  out.emplace_back(family.vars().size());  // placeholder for degree 0
  for (int m = 1; m <= n; ++m) out.push_back(instantiate(family, m));
  return out;
}

// First failing pair (a, b), if any.
std::optional<std::pair<int, int>> multiplicativity_failure(const std::vector<MonomialIdeal>& I,
                                                            int n) {
  for (int a = 1; a <= n; ++a)
    for (int b = a; a + b <= n; ++b)
      if (!I[a + b].contains(product(I[a], I[b]))) return std::pair{a, b};
  return std::nullopt;
}

void require_multiplicative(const std::vector<MonomialIdeal>& I, int n) {
  if (auto bad = multiplicativity_failure(I, n)) {
    throw MultiplicativityViolation("I_" + std::to_string(bad->first) + " * I_" +
                                    std::to_string(bad->second) + " is not contained in I_" +
                                    std::to_string(bad->first + bad->second));
  }
}

MonomialIdeal subalgebra_from(const std::vector<MonomialIdeal>& I, int m) {
  MonomialIdeal j(I[0].nvars());
  for (int a = 1; 2 * a <= m; ++a) j = sum(j, product(I[a], I[m - a]));
  return j;
}

std::vector<ExponentVector> new_from(const MonomialIdeal& ideal, const MonomialIdeal& sub) {
  std::vector<ExponentVector> out;
  for (const auto& g : ideal.generators())
    if (!sub.contains(g)) out.push_back(g);
  return out;
}

}  // namespace

bool check_multiplicative(const GradedMonomialFamily& family, int n) {
  return !multiplicativity_failure(components(family, n), n);
}

MonomialIdeal subalgebra_component(const GradedMonomialFamily& family, int m) {
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  auto I = components(family, m);
  require_multiplicative(I, m);
  return subalgebra_from(I, m);
}

std::vector<ExponentVector> new_generators(const GradedMonomialFamily& family, int m) {
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  auto I = components(family, m);
  require_multiplicative(I, m);
  return new_from(I[m], subalgebra_from(I, m));
}

ReesGenerationReport rees_report(const GradedMonomialFamily& family, int n) {
  if (n < 3) throw std::invalid_argument("rees_report needs max degree >= 3");
  family.validate(1, n);
  auto I = components(family, n);
  require_multiplicative(I, n);

  ReesGenerationReport report;
  report.max_degree = n;
  report.witness_flag = true;
  for (int m = 1; m <= n; ++m) {
    MonomialIdeal j = subalgebra_from(I, m);
    auto fresh = new_from(I[m], j);
    if (m >= 3 && fresh.empty()) report.witness_flag = false;
    report.rows.push_back(ReesRow{m, I[m], std::move(j), std::move(fresh)});
  }
  return report;
}

}  // namespace ncsurf
