#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncsurf/laurent.hpp"

namespace ncsurf {

// Q-linear span of Laurent polynomials in one chart, kept in echelon form.
// The pivot of a row is its smallest exponent in storage order, so for a
// univariate chart the pivot is the row's lowest power.
class PolynomialSpan {
 public:
  explicit PolynomialSpan(VarList vars) : vars_(std::move(vars)) {}

  const VarList& vars() const noexcept { return vars_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  std::vector<LaurentPolynomial> basis() const;

  // Returns true if p enlarged the span.
  bool insert(const LaurentPolynomial& p);
  bool contains(const LaurentPolynomial& p) const;

  // Lowest exponent of `var` attained by any nonzero element; empty if the
  // span is zero. Exact for univariate charts.
  std::optional<int> lowest_exponent(std::size_t var) const;

 private:
  LaurentPolynomial reduce(LaurentPolynomial p) const;

  VarList vars_;
  std::map<ExponentVector, LaurentPolynomial> rows_;
};

// Zassenhaus intersection of two spans in the same chart.
PolynomialSpan intersect(const PolynomialSpan& a, const PolynomialSpan& b);

}  // namespace ncsurf
