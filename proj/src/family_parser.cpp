#include "ncsurf/family_parser.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ncsurf/errors.hpp"

namespace ncsurf {

namespace {

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view src) : src_(src) {}

  GradedMonomialFamily parse() {
    std::vector<std::map<std::size_t, AffineExponent>> raw;
    raw.push_back(parse_template());
    for (;;) {
      skip_ws();
      if (at_end()) break;
      expect(',');
      raw.push_back(parse_template());
    }
    std::vector<MonomialTemplate> templates;
    for (const auto& factors : raw) {
      MonomialTemplate t;
      t.exponents.resize(names_.size());
      for (const auto& [i, a] : factors) t.exponents[i] = a;
      templates.push_back(std::move(t));
    }
    return GradedMonomialFamily(VarList(names_), std::move(templates));
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      skip_ws();
      throw ParseError(at_end() ? std::string("expected '") + c + "' but input ended"
                                : std::string("expected '") + c + "', found '" + peek() + "'",
                       pos_);
    }
  }

  int parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    if (pos_ - start > 9) throw ParseError("integer too large", start);
    return std::stoi(std::string(src_.substr(start, pos_ - start)));
  }

  bool at_m() {
    skip_ws();
    if (at_end() || peek() != 'm') return false;
    std::size_t next = pos_ + 1;
    return next >= src_.size() ||
           !(std::isalnum(static_cast<unsigned char>(src_[next])) || src_[next] == '_');
  }

  // offset := ('+'|'-') int, optional.
  int parse_offset() {
    skip_ws();
    if (accept('+')) return parse_uint();
    if (accept('-')) return -parse_uint();
    return 0;
  }

  AffineExponent parse_affexp() {
    if (accept('(')) {
      AffineExponent a = parse_affexp();
      expect(')');
      return a;
    }
    skip_ws();
    if (at_m()) {
      ++pos_;
      return AffineExponent{1, parse_offset()};
    }
    bool negative = accept('-');
    int k = parse_uint();
    // "2*m" is a slope; in "x^2*y" the '*' separates factors.
    std::size_t before_star = pos_;
    if (accept('*')) {
      if (at_m()) {
        if (negative) throw ParseError("slope must be nonnegative", pos_);
        ++pos_;
        return AffineExponent{k, parse_offset()};
      }
      pos_ = before_star;
    }
    return AffineExponent{0, negative ? -k : k};
  }

  std::map<std::size_t, AffineExponent> parse_template() {
    std::map<std::size_t, AffineExponent> factors;
    skip_ws();
    if (!at_end() && peek() == '1') {
      ++pos_;
      return factors;
    }
    do {
      auto [index, exp] = parse_factor();
      auto& slot = factors[index];
      slot.slope += exp.slope;
      slot.offset += exp.offset;
    } while (accept('*'));
    return factors;
  }

  std::pair<std::size_t, AffineExponent> parse_factor() {
    skip_ws();
    std::size_t start = pos_;
    if (at_end()) throw ParseError("expected variable but input ended", pos_);
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      throw ParseError(std::string("expected variable, found '") + peek() + "'", pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    if (name == "m") throw ParseError("'m' is the weight and cannot be a variable", start);
    std::size_t index = 0;
    while (index < names_.size() && names_[index] != name) ++index;
    if (index == names_.size()) names_.push_back(name);
    AffineExponent exp{0, 1};
    if (accept('^')) exp = parse_affexp();
    return {index, exp};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
};

}  // namespace

GradedMonomialFamily parse_family(std::string_view src, int validate_up_to) {
  GradedMonomialFamily family = FamilyParser(src).parse();
  family.validate(1, validate_up_to);
  return family;
}

}  // namespace ncsurf
