#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "support.hpp"
#include "weyl/groebner.hpp"
#include "weyl/parser.hpp"

using namespace weyl;
using namespace testing_support;

namespace {

std::vector<WeylElement> gens(std::size_t m, std::initializer_list<const char*> list) {
  std::vector<WeylElement> out;
  for (const char* s : list) out.push_back(parse_expression(s, m));
  return out;
}

std::vector<WeylElement> lemma_generators(long l) {
  std::string L = std::to_string(l);
  return {parse_expression("z1*d1 - " + L, 4), parse_expression("d1^" + std::to_string(l + 1), 4),
          parse_expression("z2*d2 + " + std::to_string(l + 1), 4), parse_expression("z2^" + std::to_string(l + 1), 4),
          parse_expression("d3", 4), parse_expression("z4", 4)};
}

template <class A>
void check_traced(const std::vector<Poly<A>>& g, const TermOrder& order) {
  auto gb = buchberger(g, order, {.trace = true});
  REQUIRE(gb.cofactors.size() == gb.elements.size());
  for (std::size_t k = 0; k < gb.elements.size(); ++k) {
    Poly<A> sum(g.front().ambient());
    for (std::size_t j = 0; j < g.size(); ++j) sum += gb.cofactors[k][j] * g[j];
    CHECK(sum == gb.elements[k]);
  }
  for (const auto& x : g) CHECK(reduce(x, gb.elements, order).is_zero());
  CHECK(verify_s_pairs(gb));
  CHECK(is_reduced(gb));
}

}  // namespace

TEST_CASE("membership in I_3") {
  WeylIdeal i3(gens(4, {"z1*d1 + z2*d2 + 1", "d3", "z4"}));
  for (const char* e : {"z4*d1", "z2*d3", "z1*d1 + z2*d2 + 1", "z3*d3 + z4*d4 + 1"})
    CHECK(i3.contains(parse_expression(e, 4)));
  CHECK_FALSE(i3.contains(WeylElement(4, 1)));
  CHECK(i3.is_proper());
  CHECK(to_string(i3.reduce(parse_expression("z3*d3 + z4*d4", 4))) == "-1");
}

TEST_CASE("unit ideal is detected") {
  WeylIdeal unit(gens(1, {"z1", "d1"}));
  CHECK_FALSE(unit.is_proper());
  CHECK(unit.groebner().elements.size() == 1);
  CHECK(unit.groebner().is_unit());
}

TEST_CASE("reduced bases of the annihilator ideals") {
  for (long l = 0; l <= 3; ++l) {
    auto g = lemma_generators(l);
    WeylIdeal ideal(g);
    const auto& gb = ideal.groebner();
    CHECK(verify_s_pairs(gb));
    CHECK(is_reduced(gb));
    CHECK(gb.elements.size() == (l == 0 ? 4u : 6u));
    for (const auto& x : g) CHECK(ideal.contains(x));
  }
}

TEST_CASE("frozen basis for l = 2") {
  WeylIdeal ideal(lemma_generators(2));
  std::vector<std::string> printed;
  for (const auto& g : ideal.groebner().elements) printed.push_back(to_string(g));
  CHECK(printed == std::vector<std::string>{"d3", "z4", "z2*d2 + 3", "z1*d1 - 2", "d1^3", "z2^3"});
}

TEST_CASE("cofactor tracing reproduces every basis element") {
  check_traced(lemma_generators(2), TermOrder{});
  check_traced(gens(3, {"z1*d2 - z2*d1", "z2*d3 - z3*d2", "d1^2 + d2^2 + d3^2"}), TermOrder{});
  check_traced(gens(2, {"d1*d2 - 1", "z1*d1 + z2*d2"}), TermOrder(OrderKind::lex));
  std::vector<Polynomial> comm = {as_commutative(parse_expression("z1^2 - z2", 2)),
                                  as_commutative(parse_expression("z1*z2 - 1", 2))};
  check_traced(comm, TermOrder(OrderKind::deglex));
}

TEST_CASE("random ideals under each order") {
  const std::size_t m = 2;
  // Small supports keep the Weyl Buchberger runs short.
  for (OrderKind kind : {OrderKind::degrevlex, OrderKind::deglex, OrderKind::lex}) {
    TermOrder order(kind);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<WeylElement> g = {random_element(m, 2, 1), random_element(m, 2, 1)};
      if (g[0].is_zero() || g[1].is_zero()) continue;
      auto gb = buchberger(g, order, {.trace = true});
      CHECK(verify_s_pairs(gb));
      CHECK(is_reduced(gb));
      for (const auto& x : g) CHECK(reduce(x, gb.elements, order).is_zero());
    }
  }
}

TEST_CASE("commutative ideals and equality") {
  auto p = [](const char* s) { return as_commutative(parse_expression(s, 2)); };
  PolynomialIdeal a({p("z1^2 - z2"), p("z1*z2 - 1")});
  PolynomialIdeal b({p("z1 - z2^2"), p("z2^3 - 1")});
  CHECK(ideal_equal(a, b));
  PolynomialIdeal c({p("z1 - z2")});
  CHECK_FALSE(ideal_equal(a, c));
  CHECK(ideal_contains(PolynomialIdeal({p("z1"), p("z2")}), a) == false);
}

TEST_CASE("left ideals are not two-sided") {
  WeylIdeal i(gens(1, {"d1"}));
  CHECK(i.contains(parse_expression("z1*d1", 1)));
  CHECK_FALSE(i.contains(parse_expression("d1*z1", 1)));
  auto right = module_multiply_ideal(i, parse_expression("z1", 1));
  CHECK(right.front() == parse_expression("z1*d1 + 1", 1));
}

TEST_CASE("pair cap aborts long computations") {
  auto g = gens(3, {"z1*d2 - z2*d1", "z2*d3 - z3*d2", "d1^2 + d2^2 + d3^2"});
  CHECK_THROWS_AS(buchberger(g, TermOrder{}, {.max_pairs = 1}), PairLimitExceeded);
  setenv("WEYL_GB_MAX_PAIRS", "1", 1);
  CHECK_THROWS_AS(buchberger(g, TermOrder{}), PairLimitExceeded);
  unsetenv("WEYL_GB_MAX_PAIRS");
  CHECK_NOTHROW(buchberger(g, TermOrder{}));
}

TEST_CASE("reduction against an empty basis leaves the element") {
  auto a = parse_expression("z1*d1 + 2", 1);
  CHECK(reduce(a, std::vector<WeylElement>{}, TermOrder{}) == a);
  CHECK_THROWS_AS(buchberger(std::vector<WeylElement>{}, TermOrder{}), std::invalid_argument);
}
