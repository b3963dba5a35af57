#include "ncsurf/binary_form.hpp"

#include <stdexcept>

#include "ncsurf/errors.hpp"

namespace ncsurf {

// ------------------------------------------------------ UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UnivariatePolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UnivariatePolynomial(std::move(c));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
  if (b.is_zero()) throw ZeroInput("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)));
  for (int k = a.degree(); k >= db; --k) {
    Rational c = r[static_cast<std::size_t>(k)] / b.leading();
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(k - db + i)] -= c * b.coefficients()[static_cast<std::size_t>(i)];
  }
  return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(r))};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ------------------------------------------------------------ BinaryForm

BinaryForm::BinaryForm(LaurentPolynomial p) : p_(std::move(p)), degree_(0) {
  if (p_.vars().size() != 2) throw std::invalid_argument("binary form needs exactly two variables");
  if (p_.is_zero()) throw std::invalid_argument("binary form must be nonzero");
  if (!p_.is_polynomial()) throw std::invalid_argument("binary form must be a polynomial");
  degree_ = static_cast<int>(p_.terms().begin()->first.total_degree());
  for (const auto& [e, c] : p_.terms())
    if (e.total_degree() != degree_) throw std::invalid_argument("binary form must be homogeneous");
}

BinaryForm BinaryForm::parse(VarList vars, std::string_view text) {
  return BinaryForm(LaurentPolynomial::parse(std::move(vars), text));
}

UnivariatePolynomial BinaryForm::dehomogenize() const {
  std::vector<Rational> c(static_cast<std::size_t>(degree_) + 1);
  for (const auto& [e, q] : p_.terms()) c[static_cast<std::size_t>(e[0])] += q;
  return UnivariatePolynomial(std::move(c));
}

int BinaryForm::multiplicity_at_infinity() const { return degree_ - dehomogenize().degree(); }

std::vector<Rational> BinaryForm::coefficient_row() const {
  std::vector<Rational> row(static_cast<std::size_t>(degree_) + 1);
  for (const auto& [e, q] : p_.terms()) row[static_cast<std::size_t>(degree_ - e[0])] = q;
  return row;
}

bool BinaryForm::vanishes_at(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [e, q] : p_.terms()) {
    Rational term = q;
    for (int i = 0; i < e[0]; ++i) term *= x;
    for (int i = 0; i < e[1]; ++i) term *= y;
    acc += term;
  }
  return acc == 0;
}

bool is_squarefree(const BinaryForm& f) {
  if (f.multiplicity_at_infinity() > 1) return false;
  UnivariatePolynomial g = f.dehomogenize();
  return gcd(g, g.derivative()).degree() <= 0;
}

int distinct_roots(const BinaryForm& f) {
  UnivariatePolynomial g = f.dehomogenize();
  UnivariatePolynomial radical = g.degree() > 0 ? divmod(g, gcd(g, g.derivative())).first : g;
  return std::max(radical.degree(), 0) + (f.multiplicity_at_infinity() > 0 ? 1 : 0);
}

bool common_root_p1(const BinaryForm& f, const BinaryForm& g) {
  if (f.multiplicity_at_infinity() > 0 && g.multiplicity_at_infinity() > 0) return true;
  return gcd(f.dehomogenize(), g.dehomogenize()).degree() > 0;
}

Rational resultant(const BinaryForm& f, const BinaryForm& g) {
  const int d = f.degree(), e = g.degree();
  const int n = d + e;
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  auto fr = f.coefficient_row();
  auto gr = g.coefficient_row();
  for (int i = 0; i < e; ++i)
    for (int k = 0; k <= d; ++k) a[i][i + k] = fr[static_cast<std::size_t>(k)];
  for (int i = 0; i < d; ++i)
    for (int k = 0; k <= e; ++k) a[e + i][i + k] = gr[static_cast<std::size_t>(k)];

  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

}  // namespace ncsurf
