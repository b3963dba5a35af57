#include "ncsurf/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ncsurf/errors.hpp"

namespace ncsurf {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

// ---------------------------------------------------------------- VarList

VarList::VarList(std::initializer_list<std::string> names)
    : VarList(std::vector<std::string>(names)) {}

VarList::VarList(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid_identifier(names[i])) throw Error("invalid variable name '" + names[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw Error("duplicate variable name '" + names[i] + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarList::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t VarList::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

VarList VarList::without(std::size_t index) const {
  std::vector<std::string> names = *names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
  return VarList(std::move(names));
}

// --------------------------------------------------------- ExponentVector

long ExponentVector::total_degree() const {
  long d = 0;
  for (int x : e_) d += x;
  return d;
}

bool ExponentVector::nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
}

ExponentVector ExponentVector::without(std::size_t index) const {
  std::vector<int> e = e_;
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
  return ExponentVector(std::move(e));
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

ExponentVector operator*(int k, const ExponentVector& a) {
  ExponentVector r = a;
  for (int& x : r.e_) x *= k;
  return r;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool graded_lex_greater(const ExponentVector& a, const ExponentVector& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a > b;
}

// ------------------------------------------------------ LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(VarList vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [e, c] : terms_)
    if (e.size() != vars_.size()) throw VariableMismatch("exponent length does not match chart");
}

LaurentPolynomial LaurentPolynomial::constant(VarList vars, const Rational& c) {
  ExponentVector zero(vars.size());
  return monomial(std::move(vars), std::move(zero), c);
}

LaurentPolynomial LaurentPolynomial::monomial(VarList vars, ExponentVector e, const Rational& c) {
  TermMap t;
  if (c != 0) t.emplace(std::move(e), c);
  return LaurentPolynomial(std::move(vars), std::move(t));
}

LaurentPolynomial LaurentPolynomial::variable(VarList vars, std::string_view name, int power) {
  ExponentVector e(vars.size());
  e[vars.index_of(name)] = power;
  return monomial(std::move(vars), std::move(e));
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.entries().begin(),
                     terms_.begin()->first.entries().end(), [](int x) { return x == 0; });
}

bool LaurentPolynomial::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.nonnegative(); });
}

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentPolynomial::min_exponent(std::size_t var) const {
  std::optional<int> r;
  for (const auto& [e, c] : terms_)
    if (!r || e[var] < *r) r = e[var];
  return r;
}

std::optional<int> LaurentPolynomial::max_exponent(std::size_t var) const {
  std::optional<int> r;
  for (const auto& [e, c] : terms_)
    if (!r || e[var] > *r) r = e[var];
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(vars_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::inverse() const {
  if (!is_monomial()) throw Error("only a monomial is invertible, got '" + to_string() + "'");
  const auto& [e, c] = *terms_.begin();
  return monomial(vars_, -1 * e, 1 / c);
}

void LaurentPolynomial::check_same_chart(const LaurentPolynomial& other) const {
  if (!(vars_ == other.vars_)) throw VariableMismatch("polynomials live in different charts");
}

LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  p.check_same_chart(q);
  LaurentPolynomial::TermMap t = p.terms_;
  for (const auto& [e, c] : q.terms_) {
    auto [it, inserted] = t.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  return LaurentPolynomial(p.vars_, std::move(t));
}

LaurentPolynomial operator-(const LaurentPolynomial& p) { return Rational(-1) * p; }

LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return p + (-q);
}

LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  p.check_same_chart(q);
  LaurentPolynomial::TermMap t;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      Rational c = c1 * c2;
      auto [it, inserted] = t.try_emplace(e1 + e2, c);
      if (!inserted) it->second += c;
    }
  }
  return LaurentPolynomial(p.vars_, std::move(t));
}

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) {
  LaurentPolynomial::TermMap t;
  if (c != 0)
    for (const auto& [e, a] : p.terms_) t.emplace(e, c * a);
  return LaurentPolynomial(p.vars_, std::move(t));
}

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p + q; }
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q) { return p * q; }

// --------------------------------------------------------------- printing

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& kv : terms_) order.push_back(&kv);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return graded_lex_greater(a->first, b->first); });

  std::ostringstream out;
  bool first = true;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), ncsurf::to_string(mag));
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(const VarList& vars, std::string_view src) : vars_(vars), src_(src) {}

  LaurentPolynomial parse() {
    LaurentPolynomial result(vars_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    result = parse_term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      result = result + parse_term(c == '-');
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view take_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    auto digits = take_digits();
    if (digits.empty()) throw ParseError("expected integer exponent", start);
    if (digits.size() > 9) throw ParseError("exponent too large", start);
    int v = std::stoi(std::string(digits));
    return negative ? -v : v;
  }

  LaurentPolynomial parse_term(bool negative) {
    LaurentPolynomial term = LaurentPolynomial::constant(vars_, negative ? -1 : 1);
    term = term * parse_factor();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      term = term * parse_factor();
    }
    return term;
  }

  LaurentPolynomial parse_factor() {
    skip_ws();
    if (at_end()) throw ParseError("expected factor", pos_);
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string text(take_digits());
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t dpos = pos_;
        auto den = take_digits();
        if (den.empty()) throw ParseError("expected denominator", dpos);
        text += "/" + std::string(den);
      }
      try {
        return LaurentPolynomial::constant(vars_, parse_rational(text));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      while (!at_end() &&
             (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        ++pos_;
      std::string_view name = src_.substr(start, pos_ - start);
      auto index = vars_.find(name);
      if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      int power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (!at_end() && peek() == '(') {
          ++pos_;
          power = parse_int();
          skip_ws();
          if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
          ++pos_;
        } else {
          power = parse_int();
        }
      }
      ExponentVector e(vars_.size());
      e[*index] = power;
      return LaurentPolynomial::monomial(vars_, std::move(e));
    }
    throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
  }

  const VarList& vars_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(VarList vars, std::string_view text) {
  return PolyParser(vars, text).parse();
}

// ------------------------------------------------------ chart operations

LaurentPolynomial restrict_var(const LaurentPolynomial& p, std::string_view var) {
  std::size_t i = p.vars().index_of(var);
  LaurentPolynomial::TermMap t;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] < 0) {
      throw NegativeExponentAtRestriction("'" + p.to_string() + "' has a pole along " +
                                          std::string(var) + " = 0");
    }
    if (e[i] == 0) t.emplace(e.without(i), c);
  }
  return LaurentPolynomial(p.vars().without(i), std::move(t));
}

LaurentPolynomial swap_vars(const LaurentPolynomial& p, std::string_view a, std::string_view b) {
  std::size_t i = p.vars().index_of(a);
  std::size_t j = p.vars().index_of(b);
  LaurentPolynomial::TermMap t;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f = e;
    std::swap(f[i], f[j]);
    t.emplace(std::move(f), c);
  }
  return LaurentPolynomial(p.vars(), std::move(t));
}

LaurentPolynomial rename(const LaurentPolynomial& p, VarList target) {
  if (target.size() != p.vars().size())
    throw VariableMismatch("rename requires charts of equal dimension");
  return LaurentPolynomial(std::move(target), p.terms());
}

LaurentPolynomial substitute(const LaurentPolynomial& p,
                             std::span<const LaurentPolynomial> images, const VarList& target) {
  if (images.size() != p.vars().size())
    throw VariableMismatch("substitution needs one image per variable");
  for (const auto& img : images)
    if (!(img.vars() == target)) throw VariableMismatch("substitution image in wrong chart");

  LaurentPolynomial result(target);
  for (const auto& [e, c] : p.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * images[i].pow(static_cast<unsigned>(e[i]));
      if (e[i] < 0) term = term * images[i].inverse().pow(static_cast<unsigned>(-e[i]));
    }
    result = result + term;
  }
  return result;
}

LaurentPolynomial derivative(const LaurentPolynomial& p, std::string_view var) {
  std::size_t i = p.vars().index_of(var);
  LaurentPolynomial::TermMap t;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    ExponentVector f = e;
    f[i] -= 1;
    t.emplace(std::move(f), c * e[i]);
  }
  return LaurentPolynomial(p.vars(), std::move(t));
}

}  // namespace ncsurf
