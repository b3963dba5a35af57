#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncsurf/rational.hpp"

namespace ncsurf {

// Ordered list of variable names bound to one chart. Two polynomials can be
// combined only if their lists are equal; moving between charts goes through
// rename() or substitute().
class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  VarList(std::initializer_list<std::string> names);
  explicit VarList(std::vector<std::string> names);
  // Moves share the list so a moved-from VarList stays usable.
  VarList(const VarList&) = default;
  VarList(VarList&& o) noexcept : names_(o.names_) {}
  VarList& operator=(const VarList&) = default;
  VarList& operator=(VarList&& o) noexcept {
    names_ = o.names_;
    return *this;
  }

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  auto begin() const { return names_->begin(); }
  auto end() const { return names_->end(); }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  VarList without(std::size_t index) const;

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> e) : e_(e) {}
  explicit ExponentVector(std::vector<int> e) : e_(std::move(e)) {}

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  std::span<const int> entries() const noexcept { return e_; }

  long total_degree() const;
  bool nonnegative() const;
  ExponentVector without(std::size_t index) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator*(int k, const ExponentVector& a);
  // Lexicographic; used for storage only.
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> e_;
};

// Entrywise a <= b, i.e. x^a divides x^b among monomials with nonnegative exponents.
bool divides(const ExponentVector& a, const ExponentVector& b);

// Printing order: higher total degree first, ties broken by descending lex.
bool graded_lex_greater(const ExponentVector& a, const ExponentVector& b);

// Multivariate Laurent polynomial with exact rational coefficients.
// Immutable in practice: every operation returns a new value.
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  explicit LaurentPolynomial(VarList vars) : vars_(std::move(vars)) {}
  LaurentPolynomial(VarList vars, TermMap terms);

  static LaurentPolynomial constant(VarList vars, const Rational& c);
  static LaurentPolynomial monomial(VarList vars, ExponentVector e, const Rational& c = 1);
  static LaurentPolynomial variable(VarList vars, std::string_view name, int power = 1);
  static LaurentPolynomial parse(VarList vars, std::string_view text);

  const VarList& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // No negative exponent in any variable.
  bool is_polynomial() const;
  Rational coefficient(const ExponentVector& e) const;

  // Smallest / largest exponent of one variable over all terms; empty for zero.
  std::optional<int> min_exponent(std::size_t var) const;
  std::optional<int> max_exponent(std::size_t var) const;

  LaurentPolynomial pow(unsigned k) const;
  // Only monomials are invertible.
  LaurentPolynomial inverse() const;

  std::string to_string() const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p);
  friend LaurentPolynomial operator-(const LaurentPolynomial& p);
  friend bool operator==(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    return p.vars_ == q.vars_ && p.terms_ == q.terms_;
  }

 private:
  void check_same_chart(const LaurentPolynomial& other) const;

  VarList vars_;
  TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);

// Sets `var` to zero. Throws NegativeExponentAtRestriction if some term has a
// pole in `var`. The result lives in the remaining variables.
LaurentPolynomial restrict_var(const LaurentPolynomial& p, std::string_view var);

LaurentPolynomial swap_vars(const LaurentPolynomial& p, std::string_view a, std::string_view b);

// Positional renaming into another chart with the same number of variables.
LaurentPolynomial rename(const LaurentPolynomial& p, VarList target);

// Replaces the i-th variable of p by images[i]; every image lives in `target`.
// A negative power requires a monomial image.
LaurentPolynomial substitute(const LaurentPolynomial& p,
                             std::span<const LaurentPolynomial> images, const VarList& target);

LaurentPolynomial derivative(const LaurentPolynomial& p, std::string_view var);

}  // namespace ncsurf
