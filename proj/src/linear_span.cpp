#include "ncsurf/linear_span.hpp"

#include "ncsurf/errors.hpp"

namespace ncsurf {

std::vector<LaurentPolynomial> PolynomialSpan::basis() const {
  std::vector<LaurentPolynomial> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row);
  return out;
}

LaurentPolynomial PolynomialSpan::reduce(LaurentPolynomial p) const {
  // Rows are visited by increasing pivot; eliminating pivot k only touches
  // exponents above k, so earlier positions stay clean.
  for (const auto& [pivot, row] : rows_) {
    Rational c = p.coefficient(pivot);
    if (c != 0) p = p - c * row;
  }
  return p;
}

bool PolynomialSpan::insert(const LaurentPolynomial& p) {
  if (!(p.vars() == vars_)) throw VariableMismatch("span and vector live in different charts");
  LaurentPolynomial r = reduce(p);
  if (r.is_zero()) return false;
  auto lead = r.terms().begin();
  ExponentVector pivot = lead->first;
  Rational scale = 1 / lead->second;
  rows_.emplace(std::move(pivot), scale * r);
  return true;
}

bool PolynomialSpan::contains(const LaurentPolynomial& p) const {
  if (!(p.vars() == vars_)) throw VariableMismatch("span and vector live in different charts");
  return reduce(p).is_zero();
}

std::optional<int> PolynomialSpan::lowest_exponent(std::size_t var) const {
  std::optional<int> low;
  for (const auto& [pivot, row] : rows_) {
    auto m = row.min_exponent(var);
    if (m && (!low || *m < *low)) low = m;
  }
  return low;
}

PolynomialSpan intersect(const PolynomialSpan& a, const PolynomialSpan& b) {
  if (!(a.vars() == b.vars())) throw VariableMismatch("spans live in different charts");
  const VarList& vars = a.vars();

  // Block chart: a leading tag variable separates the left block (tag 0) from
  // the right block (tag 1); lex storage order puts the left block first.
  std::vector<std::string> names{"zassenhaus_tag_"};
  names.insert(names.end(), vars.begin(), vars.end());
  VarList block(std::move(names));

  auto embed = [&](const LaurentPolynomial& p, int tag) {
    LaurentPolynomial::TermMap t;
    for (const auto& [e, c] : p.terms()) {
      std::vector<int> f{tag};
      f.insert(f.end(), e.entries().begin(), e.entries().end());
      t.emplace(ExponentVector(std::move(f)), c);
    }
    return LaurentPolynomial(block, std::move(t));
  };

  PolynomialSpan work(block);
  for (const auto& u : a.basis()) work.insert(embed(u, 0) + embed(u, 1));
  for (const auto& w : b.basis()) work.insert(embed(w, 0));

  PolynomialSpan result(vars);
  for (const auto& row : work.basis()) {
    if (row.terms().begin()->first[0] != 1) continue;
    LaurentPolynomial::TermMap t;
    for (const auto& [e, c] : row.terms()) t.emplace(e.without(0), c);
    result.insert(LaurentPolynomial(vars, std::move(t)));
  }
  return result;
}

}  // namespace ncsurf
