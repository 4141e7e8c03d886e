#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "weyl/delta_module.hpp"
#include "weyl/errors.hpp"
#include "weyl/parser.hpp"

using namespace weyl;
using namespace testing_support;

namespace {

WeylElement P(const std::string& s, std::size_t m) { return parse_expression(s, m); }

DeltaSection section(const DeltaModule& mod, const std::string& op) { return act(P(op, mod.ambient()), delta(mod)); }

std::vector<WeylElement> list(std::size_t m, std::initializer_list<std::string> items) {
  std::vector<WeylElement> out;
  for (const auto& s : items) out.push_back(P(s, m));
  return out;
}

std::vector<WeylElement> lemma_generators(long l) {
  auto L = std::to_string(l), L1 = std::to_string(l + 1);
  return list(4, {"z1*d1 - " + L, "d1^" + L1, "z2*d2 + " + L1, "z2^" + L1, "d3", "z4"});
}

std::vector<WeylElement> n3_generators(long l) {
  auto L = std::to_string(l);
  return list(6, {"d1", "z6", "z2*d2 + z3*d3", "z2*d2 + z4*d4 - 1 - " + L, "z2*d4 + z3*d5",
                  "d2^" + std::to_string(l + 1) + "*d4", "z3^" + L + "*d4", "d2^" + std::to_string(l + 2) + "*d5",
                  "z3^" + std::to_string(l + 1) + "*d5", "d4^2", "d5^2", "d4*d5", "z4*d4 + z5*d5 - 1"});
}

}  // namespace

TEST_CASE("generator rules") {
  DeltaModule b(4, {2, 4});
  CHECK(act(P("z2", 4), delta(b)).is_zero());
  CHECK(act(P("z4", 4), delta(b)).is_zero());
  CHECK(act(P("d1", 4), delta(b)).is_zero());
  CHECK(section(b, "z2*d2^3") == section(b, "-3*d2^2"));
  CHECK(section(b, "d1*z1^2") == section(b, "2*z1"));
  CHECK(act(WeylElement(4, 1), delta(b)) == delta(b));
  CHECK(to_string(section(b, "z1*d2")) == "(z1*d2)*delta(z2,z4)");
  CHECK(annihilates(b.presentation().generators(), delta(b)));
  CHECK_FALSE(annihilates(list(4, {"z1"}), delta(b)));
}

TEST_CASE("polynomial module") {
  DeltaModule ox(3, {});
  for (long l = 0; l <= 4; ++l) {
    auto p = section(ox, "z1^" + std::to_string(l));
    auto L = std::to_string(l);
    CHECK(act_on_polynomial(P("z1*d1 - " + L, 3), p).is_zero());
    CHECK(act_on_polynomial(P("d1^" + std::to_string(l + 1), 3), p).is_zero());
    CHECK(act_on_polynomial(WeylElement(3, 1), p) == p);
  }
  CHECK_THROWS_AS(act_on_polynomial(P("d1", 4), delta(DeltaModule(4, {2}))), std::invalid_argument);
}

TEST_CASE("n = 3 section displays agree") {
  DeltaModule b(6, {3, 6});
  for (long l = 0; l <= 3; ++l) {
    auto L = std::to_string(l);
    auto t1 = section(b, "(z2*d3 + z4*d5)^" + L + "*z2*z5");
    auto t2 = section(b, "z2^" + L + "*(z2*z5*d3^" + L + " + " + L + "*z4*d3^" + std::to_string(l ? l - 1 : 0) + ")");
    auto t3 = section(b, "(z2*z5 - z3*z4)*(z2*d3)^" + L);
    CHECK(t1 == t2);
    CHECK(t1 == t3);
    CHECK_FALSE(t1.is_zero());
  }
}

TEST_CASE("annihilators") {
  DeltaModule b(4, {2, 4});
  for (long l = 0; l <= 3; ++l) {
    auto t = section(b, "(z1*d2)^" + std::to_string(l));
    CHECK(annihilates(lemma_generators(l), t));
    auto cert = certify_annihilator(WeylIdeal(lemma_generators(l)), t);
    CHECK(cert.conclusion == CertificateConclusion::equality);
  }
  DeltaModule b3(6, {3, 6});
  for (long l = 0; l <= 2; ++l) {
    auto L = std::to_string(l);
    auto t = section(b3, "(z2*d3 + z4*d5)^" + L + "*z2*z5");
    CHECK(annihilates(n3_generators(l), t));
    CHECK(certify_annihilator(WeylIdeal(n3_generators(l)), t).conclusion == CertificateConclusion::equality);
  }
}

TEST_CASE("certification reports the failing check") {
  DeltaModule b(4, {2, 4});
  auto t = delta(b);
  auto i3 = list(4, {"z1*d1 + z2*d2 + 1", "d3", "z4"});
  auto cert = certify_annihilator(WeylIdeal(i3), t);
  CHECK(cert.generators_annihilate);
  CHECK(cert.conclusion == CertificateConclusion::inconclusive);
  CHECK(cert.failed_check == "simplicity");

  auto broken = lemma_generators(1);
  broken[2] = P("z2*d2", 4);
  auto c2 = certify_annihilator(WeylIdeal(broken), section(b, "z1*d2"));
  CHECK(c2.conclusion == CertificateConclusion::inconclusive);
  REQUIRE(c2.failing_generator);
  CHECK(*c2.failing_generator == P("z2*d2", 4));
}

TEST_CASE("module axioms on random inputs") {
  DeltaModule b(3, {2});
  for (int trial = 0; trial < 60; ++trial) {
    auto x = random_element(3, 2, 2), y = random_element(3, 2, 2);
    auto s = act(random_element(3, 3, 2), delta(b));
    CHECK(act(x * y, s) == act(x, act(y, s)));
    auto sum = act(x + y, s);
    auto parts = act(x, s);
    parts.poly += act(y, s).poly;
    CHECK(sum == parts);
  }
}

TEST_CASE("Fourier transport") {
  PartialFourierSpec spec(4, {2, 4});
  DeltaModule b(4, {2, 4});
  DeltaModule ox(4, {});
  for (long l = 0; l <= 3; ++l) {
    auto t = section(b, "(z1*d2)^" + std::to_string(l));
    auto p = section(ox, "(-z1*z2)^" + std::to_string(l));
    CHECK(fourier_image(spec, t) == p);
    CHECK(fourier_transport_check(spec, WeylIdeal(lemma_generators(l)), t, p));
  }
  CHECK(fourier_transport_check(spec, b.presentation(), delta(b), delta(ox)));
  CHECK(fourier_transport_check(PartialFourierSpec(1, {}), WeylIdeal(list(1, {"d1"})), delta(DeltaModule(1, {})),
                                delta(DeltaModule(1, {}))));
  CHECK_THROWS_AS(fourier_image(PartialFourierSpec(4, {2}), delta(b)), std::invalid_argument);

  // Intertwining: a acting on a section corresponds to F(a) acting on its image.
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_element(4, 2, 2);
    auto s = act(random_element(4, 2, 2), delta(b));
    CHECK(fourier_image(spec, act(a, s)) == act_on_polynomial(partial_fourier(spec, a), fourier_image(spec, s)));
  }
}

TEST_CASE("interpolation lift") {
  auto zero = WeylElement(4);
  auto one = WeylElement(4, 1);
  auto p = interpolation_lift({{0, one}, {1, zero}}, 1);
  CHECK(p == P("-(z1*d1 - 1)", 4));
  CHECK(WeylIdeal(lemma_generators(0)).reduce(p - one).is_zero());
  CHECK(WeylIdeal(lemma_generators(1)).reduce(p).is_zero());

  auto q = interpolation_lift({{0, one}, {1, P("z3", 4)}, {2, P("d2", 4)}}, 2);
  CHECK(WeylIdeal(lemma_generators(0)).reduce(q - one).is_zero());
  CHECK(WeylIdeal(lemma_generators(1)).reduce(q - P("z3", 4)).is_zero());
  CHECK(WeylIdeal(lemma_generators(2)).reduce(q - P("d2", 4)).is_zero());

  auto single = interpolation_lift({{2, P("z3", 4)}}, 2);
  CHECK(WeylIdeal(lemma_generators(2)).reduce(single - P("z3", 4)).is_zero());
  CHECK(interpolation_lift({{0, zero}, {1, zero}}, 1).is_zero());
  CHECK_THROWS_AS(interpolation_lift({{1, one}, {1, zero}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(interpolation_lift({{3, one}}, 2), std::invalid_argument);
}

TEST_CASE("annihilation survives passing to a Groebner basis") {
  DeltaModule b(4, {2, 4});
  for (long l = 0; l <= 3; ++l) {
    auto t = section(b, "(z1*d2)^" + std::to_string(l));
    CHECK(annihilates(WeylIdeal(lemma_generators(l)).groebner().elements, t));
  }
}

TEST_CASE("certified annihilators contain every small annihilating operator") {
  DeltaModule b(4, {2, 4});
  auto t = section(b, "z1*d2");
  WeylIdeal ideal(lemma_generators(1));
  REQUIRE(certify_annihilator(ideal, t).conclusion == CertificateConclusion::equality);
  int found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto a = random_element(4, 2, 1);
    if (a.is_zero() || bernstein_degree(a) > 3) continue;
    if (act(a, t).is_zero()) {
      ++found;
      CHECK(ideal.contains(a));
    }
  }
  // Products of generators are annihilating by construction.
  for (const auto& g : lemma_generators(1)) {
    auto a = random_element(4, 1, 1) * g;
    CHECK(act(a, t).is_zero());
    CHECK(ideal.contains(a));
  }
  MESSAGE("random annihilating operators found: " << found);
}
