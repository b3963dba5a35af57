#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncsurf/laurent.hpp"

namespace ncsurf {

// Monomial ideal given by its minimal generators. The empty generator set is
// the zero ideal; {0-vector} is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  bool contains(const ExponentVector& mono) const;
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t nvars);

  std::size_t nvars_;
  // Sorted by total degree, then descending lex.
  std::vector<ExponentVector> gens_;
};

// Divisibility-minimal subset generating the same ideal. Throws
// std::invalid_argument on negative or wrong-length exponents.
MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t nvars);

bool member(const ExponentVector& mono, const MonomialIdeal& ideal);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

std::string to_string(const ExponentVector& mono, const VarList& vars);
std::string to_string(const MonomialIdeal& ideal, const VarList& vars);
// "{x, y}" style set rendering; "{}" for the empty set.
std::string to_string(const std::vector<ExponentVector>& monos, const VarList& vars);

// slope*m + offset.
struct AffineExponent {
  int slope = 0;
  int offset = 0;

  long eval(int m) const { return static_cast<long>(slope) * m + offset; }
  std::string to_string() const;
  friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

struct MonomialTemplate {
  std::vector<AffineExponent> exponents;  // one per family variable
  friend bool operator==(const MonomialTemplate&, const MonomialTemplate&) = default;
};

// Degree-indexed family m -> I_m whose generators have exponents affine in m.
class GradedMonomialFamily {
 public:
  // Throws std::invalid_argument for negative slopes or wrong template arity.
  GradedMonomialFamily(VarList vars, std::vector<MonomialTemplate> templates);

  const VarList& vars() const noexcept { return vars_; }
  const std::vector<MonomialTemplate>& templates() const noexcept { return templates_; }

  // Template generators at weight m, unminimalized. Throws NegativeExponent.
  std::vector<ExponentVector> raw_generators(int m) const;
  // Throws NegativeExponent naming the first offending weight in [lo, hi].
  void validate(int lo, int hi) const;

  // Canonical rendering in the family DSL, e.g. "x*y, x^m, y^m".
  std::string to_string() const;

  friend bool operator==(const GradedMonomialFamily& a, const GradedMonomialFamily& b) {
    return a.vars_ == b.vars_ && a.templates_ == b.templates_;
  }

 private:
  VarList vars_;
  std::vector<MonomialTemplate> templates_;
};

MonomialIdeal instantiate(const GradedMonomialFamily& family, int m);

// True iff I_a * I_b is contained in I_{a+b} for all 1 <= a <= b, a + b <= n.
bool check_multiplicative(const GradedMonomialFamily& family, int n);

// J_m: the degree-m part of the algebra generated in degrees < m, taken over
// the full coordinate ring in degree 0. Throws MultiplicativityViolation.
MonomialIdeal subalgebra_component(const GradedMonomialFamily& family, int m);

// Minimal generators of I_m outside J_m.
std::vector<ExponentVector> new_generators(const GradedMonomialFamily& family, int m);

struct ReesRow {
  int degree;
  MonomialIdeal ideal;        // I_m
  MonomialIdeal subalgebra;   // J_m
  std::vector<ExponentVector> new_generators;
};

struct ReesGenerationReport {
  std::vector<ReesRow> rows;  // degrees 1..max_degree
  int max_degree = 0;
  // Every degree in [3, max_degree] needs a new generator.
  bool witness_flag = false;
};

// Requires n >= 3. Throws MultiplicativityViolation, NegativeExponent.
ReesGenerationReport rees_report(const GradedMonomialFamily& family, int n);

}  // namespace ncsurf
