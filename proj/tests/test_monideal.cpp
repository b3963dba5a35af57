#include <doctest.h>

#include "generators.hpp"
#include "ncsurf/errors.hpp"
#include "ncsurf/family_parser.hpp"
#include "ncsurf/monideal.hpp"
#include "oracles.hpp"

#include <map>
#include <set>

using namespace ncsurf;

namespace {

const VarList& xy() {
  static const VarList v{"x", "y"};
  return v;
}

using EV = ExponentVector;

MonomialIdeal I(std::vector<EV> gens) { return minimalize(std::move(gens), 2); }

std::string str(const MonomialIdeal& i) { return to_string(i, xy()); }

// Generators keyed by variable name, so ideals over differently ordered
// variable lists compare.
std::set<std::map<std::string, int>> by_name(const MonomialIdeal& i, const VarList& vars) {
  std::set<std::map<std::string, int>> out;
  for (const auto& g : i.generators()) {
    std::map<std::string, int> m;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (g[k]) m[vars[k]] = static_cast<int>(g[k]);
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("minimalize") {
  CHECK(str(I({{1, 1}, {1, 0}, {0, 1}})) == "(x, y)");
  CHECK(str(I({{2, 0}, {1, 1}, {0, 2}})) == "(x^2, x*y, y^2)");
  CHECK(str(I({{0, 0}, {1, 0}})) == "(1)");
  CHECK(str(I({})) == "(0)");
  CHECK(I({{1, 0}, {1, 0}}).generators().size() == 1);
}

TEST_CASE("member") {
  CHECK(member({1, 1}, I({{2, 0}, {1, 1}, {0, 2}})));
  CHECK_FALSE(member({1, 1}, I({{3, 0}, {2, 1}, {1, 2}, {0, 3}})));
  CHECK_FALSE(member({0, 0}, I({{1, 0}, {0, 1}})));
  CHECK_FALSE(member({0, 0}, MonomialIdeal(2)));
}

TEST_CASE("product and sum") {
  auto m = I({{1, 0}, {0, 1}});
  CHECK(str(product(m, m)) == "(x^2, x*y, y^2)");
  CHECK(str(product(m, I({{1, 1}, {2, 0}, {0, 2}}))) == "(x^3, x^2*y, x*y^2, y^3)");
  auto j = I({{1, 1}, {4, 0}});
  CHECK(product(j, I({{0, 0}})) == j);
  CHECK(product(j, MonomialIdeal(2)).is_zero());
  CHECK(str(sum(I({{2, 0}}), I({{1, 1}, {3, 0}}))) == "(x^2, x*y)");
}

TEST_CASE("ideal containment") {
  auto big = I({{1, 0}, {0, 1}});
  auto small = I({{2, 0}, {1, 1}});
  CHECK(big.contains(small));
  CHECK_FALSE(small.contains(big));
  CHECK(big.contains(MonomialIdeal(2)));
}

TEST_CASE("affine exponents print canonically") {
  CHECK(AffineExponent{1, 0}.to_string() == "m");
  CHECK(AffineExponent{2, 1}.to_string() == "2*m+1");
  CHECK(AffineExponent{1, -2}.to_string() == "m-2");
  CHECK(AffineExponent{0, 3}.to_string() == "3");
  CHECK(AffineExponent{2, 1}.eval(4) == 9);
}

TEST_CASE("instantiate") {
  auto f = parse_family("x*y, x^m, y^m");
  CHECK(str(instantiate(f, 3)) == "(x*y, x^3, y^3)");
  CHECK(str(instantiate(f, 1)) == "(x, y)");
  CHECK(instantiate(f, 2) == I({{1, 1}, {2, 0}, {0, 2}}));
  CHECK_THROWS_AS(instantiate(parse_family("x^(m+1)*y^(2*m-3)", 0), 1), NegativeExponent);
}

TEST_CASE("check_multiplicative") {
  CHECK(check_multiplicative(parse_family("x*y, x^m, y^m"), 12));
  CHECK(check_multiplicative(parse_family("x^m"), 12));
  // I_1 = (x), I_2 = (x^3): I_1 * I_1 = (x^2) is not inside I_2.
  CHECK_FALSE(check_multiplicative(parse_family("x^(2*m-1)"), 4));
}

TEST_CASE("subalgebra_component") {
  auto f = parse_family("x*y, x^m, y^m");
  CHECK(str(subalgebra_component(f, 2)) == "(x^2, x*y, y^2)");
  CHECK(str(subalgebra_component(f, 3)) == "(x^3, x^2*y, x*y^2, y^3)");
  CHECK(str(subalgebra_component(f, 4)) == "(x^2*y, x*y^2, x^4, y^4)");
  CHECK(subalgebra_component(f, 1).is_zero());
  CHECK_THROWS_AS(subalgebra_component(parse_family("x^(2*m-1)"), 2), MultiplicativityViolation);
}

TEST_CASE("new_generators") {
  auto f = parse_family("x*y, x^m, y^m");
  CHECK(to_string(new_generators(f, 1), xy()) == "{x, y}");
  CHECK(to_string(new_generators(f, 2), xy()) == "{}");
  CHECK(to_string(new_generators(f, 5), xy()) == "{x*y}");
  CHECK_THROWS_AS(new_generators(parse_family("x^(2*m-1)"), 3), MultiplicativityViolation);
}

TEST_CASE("rees_report") {
  auto r = rees_report(parse_family("x*y, x^m, y^m"), 20);
  REQUIRE(r.rows.size() == 20);
  CHECK(r.witness_flag);
  CHECK(r.max_degree == 20);
  for (const auto& row : r.rows) {
    if (row.degree >= 3) CHECK(to_string(row.new_generators, xy()) == "{x*y}");
  }

  auto principal = rees_report(parse_family("x^m"), 20);
  CHECK_FALSE(principal.witness_flag);
  for (const auto& row : principal.rows) CHECK(row.new_generators.empty() == (row.degree > 1));

  CHECK_THROWS_AS(rees_report(parse_family("x*y"), 2), std::invalid_argument);
}

TEST_CASE("the constant family regenerates x*y in every degree") {
  // I_m = (xy) for all m, so J_m = (x^2 y^2) for m >= 2 and xy is new in each
  // degree; the flag is therefore set.
  auto r = rees_report(parse_family("x*y"), 20);
  for (const auto& row : r.rows) {
    CHECK(to_string(row.new_generators, xy()) == "{x*y}");
    if (row.degree >= 2) CHECK(to_string(row.subalgebra, xy()) == "(x^2*y^2)");
  }
  CHECK(r.witness_flag);
}

TEST_CASE("family parser") {
  CHECK(parse_family("x*y, x^m, y^m").to_string() == "x*y, x^m, y^m");
  CHECK(parse_family("x^m").to_string() == "x^m");
  CHECK(parse_family("x * y ,x^( m ),y^(1*m+0)").to_string() == "x*y, x^m, y^m");
  CHECK(parse_family("a^(2*m+1)*b^3").to_string() == "a^(2*m+1)*b^3");
  CHECK(parse_family("x^2*y^m").to_string() == "x^2*y^m");
  CHECK(parse_family("x^2 * m").to_string() == "x^(2*m)");
  CHECK(parse_family("1, x").to_string() == "1, x");
  CHECK_THROWS_AS(parse_family("x^(m-2)"), NegativeExponent);
  CHECK_THROWS_AS(parse_family("x^m*m"), ParseError);
  CHECK_THROWS_AS(parse_family("x^-m"), ParseError);
  try {
    parse_family("x*y, , y^m");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("property: family round trip") {
  gen::Rng rng(21);
  const char* names[] = {"x", "y", "z"};
  for (int i = 0; i < 200; ++i) {
    std::string src;
    int templates = gen::uniform(rng, 1, 3);
    for (int t = 0; t < templates; ++t) {
      if (t) src += ", ";
      int factors = gen::uniform(rng, 1, 3);
      for (int f = 0; f < factors; ++f) {
        if (f) src += "*";
        src += names[gen::uniform(rng, 0, 2)];
        int slope = gen::uniform(rng, 0, 3), offset = gen::uniform(rng, 0, 3);
        src += "^(" + std::to_string(slope) + "*m+" + std::to_string(offset) + ")";
      }
    }
    auto fam = parse_family(src);
    auto again = parse_family(fam.to_string());
    INFO(src);
    // Zero exponents do not print, so one pass may drop or reorder variables;
    // after that the printed form is a fixed point.
    auto third = parse_family(again.to_string());
    CHECK(third == again);
    CHECK(third.to_string() == again.to_string());
    for (int m = 1; m <= 4; ++m)
      CHECK(by_name(instantiate(again, m), again.vars()) == by_name(instantiate(fam, m), fam.vars()));
  }
}

TEST_CASE("property: ideal operations match enumeration") {
  gen::Rng rng(22);
  const int bound = 12;
  for (int i = 0; i < 300; ++i) {
    auto ga = gen::generators(rng, 2, 4, 5);
    auto gb = gen::generators(rng, 2, 4, 5);
    auto a = minimalize(ga, 2), b = minimalize(gb, 2);

    auto box_a = oracle::ideal_in_box(oracle::monos(ga), 2, bound);
    CHECK(oracle::monos(a.generators()) == oracle::minimal_elements(box_a));
    for (const auto& e : oracle::box(2, 6)) {
      EV ev(e);
      CHECK(member(ev, a) == (box_a.count(e) > 0));
    }
    auto prod_box =
        oracle::ideal_in_box(oracle::pairwise_sums(oracle::monos(ga), oracle::monos(gb)), 2, bound);
    CHECK(oracle::monos(product(a, b).generators()) == oracle::minimal_elements(prod_box));
    CHECK(a.contains(product(a, b)));
    CHECK(sum(a, b).contains(a));
  }
}

TEST_CASE("property: new generators agree with a degree-bounded oracle") {
  for (const char* src : {"x*y, x^m, y^m", "x^m", "x*y", "x^2*y, y^(2*m)", "x^m*y^m"}) {
    auto fam = parse_family(src);
    const int n = 8;
    const int bound = 2 * n + 2;
    const std::size_t nv = fam.vars().size();
    std::vector<oracle::MonoSet> ideal(n + 1);
    for (int m = 1; m <= n; ++m)
      ideal[m] = oracle::ideal_in_box(oracle::monos(fam.raw_generators(m)), nv, bound);
    for (int m = 1; m <= n; ++m) {
      oracle::MonoSet expected;
      for (const auto& e : oracle::minimal_elements(ideal[m])) {
        if (oracle::degree(e) > 6) continue;
        bool in_j = false;
        for (int a = 1; a < m && !in_j; ++a)
          for (const auto& p : ideal[a]) {
            oracle::Mono q(nv);
            bool nonneg = true;
            for (std::size_t k = 0; k < nv; ++k) nonneg = nonneg && (q[k] = e[k] - p[k]) >= 0;
            if (nonneg && ideal[m - a].count(q)) {
              in_j = true;
              break;
            }
          }
        if (!in_j) expected.insert(e);
      }
      oracle::MonoSet computed;
      for (const auto& e : new_generators(fam, m))
        if (e.total_degree() <= 6) computed.insert(oracle::mono(e));
      CHECK_MESSAGE(computed == expected, src << " m=" << m);
    }
  }
}
