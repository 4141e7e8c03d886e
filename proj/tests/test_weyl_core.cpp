#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rewriting_oracle.hpp"
#include "support.hpp"
#include "weyl/errors.hpp"
#include "weyl/fourier.hpp"
#include "weyl/parser.hpp"
#include "weyl/weyl.hpp"

using namespace weyl;
using namespace testing_support;

namespace {
WeylElement P(const std::string& s, std::size_t m) { return parse_expression(s, m); }
}  // namespace

TEST_CASE("monomial products follow the commutation relation") {
  const std::size_t m = 2;
  auto z1 = WeylElement::z(m, 1), d1 = WeylElement::d(m, 1), z2 = WeylElement::z(m, 2);
  CHECK(d1 * z1 == z1 * d1 + WeylElement(m, 1));
  CHECK(commutator(d1, z1) == WeylElement(m, 1));
  CHECK(commutator(d1, z2).is_zero());
  CHECK(P("d1^2*z1^2", m) == P("z1^2*d1^2 + 4*z1*d1 + 2", m));
  CHECK(P("d1^3*z1^2", m) == P("z1^2*d1^3 + 6*z1*d1^2 + 6*d1", m));
}

TEST_CASE("products agree with one-swap rewriting on random words") {
  const std::size_t m = 3;
  for (int trial = 0; trial < 500; ++trial) {
    Word a = random_word(m, 6), b = random_word(m, 6);
    Word ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    WeylElement expected = rewrite_normal_order(m, ab);
    REQUIRE(word_element(m, a) * word_element(m, b) == expected);
    REQUIRE(normalize(m, {{Rational(1), ab}}) == expected);
  }
}

TEST_CASE("ring axioms on random elements") {
  const std::size_t m = 3;
  WeylElement one(m, 1);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_element(m, 3, 2), b = random_element(m, 3, 2), c = random_element(m, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(one * a == a);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    CHECK(commutator(a, b) == -commutator(b, a));
  }
}

TEST_CASE("parser examples") {
  CHECK(to_string(parse_expression("z1*d1 - 3")) == "z1*d1 - 3");
  CHECK(to_string(parse_expression("d1*z1")) == "z1*d1 + 1");
  CHECK(to_string(parse_expression("(z2*d3 + z4*d5)^2")) == "z2^2*d3^2 + 2*z2*z4*d3*d5 + z4^2*d5^2");
  CHECK(to_string(parse_expression("z1/2 - 3/4")) == "z1/2 - 3/4");
  CHECK(parse_expression("-(z1)").ambient() == 1);
  CHECK(parse_expression("z3").ambient() == 3);
  CHECK(parse_expression("1").ambient() == 1);
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_expression("z1 +"), ParseError);
  CHECK_THROWS_AS(parse_expression("z1 ** d1"), ParseError);
  CHECK_THROWS_AS(parse_expression("x1"), ParseError);
  CHECK_THROWS_AS(parse_expression("z0"), ParseError);
  CHECK_THROWS_WITH_AS(parse_expression("z5", 4), doctest::Contains("unknown symbol"), ParseError);
  CHECK_THROWS_WITH_AS(parse_expression("z1^99999999999"), doctest::Contains("exponent overflow"), ParseError);
  try {
    parse_expression("z1 + )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("print then parse is a fixed point") {
  const std::size_t m = 3;
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_element(m, 4, 3);
    a *= Rational(1, uniform(1, 7));
    std::string text = to_string(a);
    CHECK(parse_expression(text, m) == a);
    CHECK(to_string(parse_expression(text, m)) == text);
  }
}

TEST_CASE("ambient mismatch is an error") {
  auto a = WeylElement::z(2, 1), b = WeylElement::z(3, 1);
  CHECK_THROWS_AS(a + b, AmbientMismatch);
  CHECK_THROWS_AS(a * b, AmbientMismatch);
  CHECK_THROWS_AS(WeylElement::z(2, 3), std::out_of_range);
}

TEST_CASE("Bernstein degree and principal symbol") {
  CHECK(bernstein_degree(P("z1*d1 + 1", 1)) == 2);
  CHECK(bernstein_degree(P("d1^3", 1)) == 3);
  CHECK_THROWS_AS(bernstein_degree(WeylElement(2)), ZeroElement);
  CHECK(to_string(principal_symbol(P("z2*d2 + 3", 2))) == "z2*zeta2");
  const std::size_t m = 3;
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_element(m, 3, 2), b = random_element(m, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(bernstein_degree(a * b) == bernstein_degree(a) + bernstein_degree(b));
    CHECK(principal_symbol(a * b) == principal_symbol(a) * principal_symbol(b));
  }
}

TEST_CASE("partial Fourier transform") {
  PartialFourierSpec spec(4, {2, 4});
  CHECK(partial_fourier(spec, P("z2", 4)) == P("d2", 4));
  CHECK(partial_fourier(spec, P("d2", 4)) == P("-z2", 4));
  CHECK(partial_fourier(spec, P("z1*d1", 4)) == P("z1*d1", 4));
  // Image of z2 d2 - l is -(z2 d2 + l + 1); its inverse gives back the generator.
  CHECK(partial_fourier(spec, P("z2*d2 + 3", 4)) == P("-(z2*d2 - 2)", 4));
  CHECK_THROWS_AS(PartialFourierSpec(4, {5}), std::out_of_range);

  const std::size_t m = 3;
  PartialFourierSpec s(m, {1, 3});
  for (int trial = 0; trial < 80; ++trial) {
    auto a = random_element(m, 3, 2), b = random_element(m, 3, 2);
    auto fa = partial_fourier(s, a);
    CHECK(partial_fourier(s, fa) == sign_flip(s, a));
    CHECK(partial_fourier(s, partial_fourier(s, fa)) == partial_fourier(s, sign_flip(s, a)));
    CHECK(sign_flip(s, sign_flip(s, a)) == a);
    CHECK(partial_fourier(s, a * b) == fa * partial_fourier(s, b));
  }
}

TEST_CASE("commutative reinterpretation round-trips") {
  const std::size_t m = 2;
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_element(m, 4, 3);
    CHECK(as_normal_ordered(as_commutative(a)) == a);
  }
}
