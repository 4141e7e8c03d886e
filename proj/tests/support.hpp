#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weyl/poly.hpp"
#include "weyl/weyl.hpp"

namespace testing_support {

// Every randomized suite draws from this seed so failures reproduce.
inline constexpr std::uint32_t kSeed = 20240607u;

inline std::mt19937& rng() {
  static std::mt19937 gen(kSeed);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline weyl::Word random_word(std::size_t m, int max_len) {
  weyl::Word w;
  int len = uniform(0, max_len);
  for (int k = 0; k < len; ++k) w.push_back({uniform(0, 1) == 1, static_cast<std::size_t>(uniform(1, static_cast<int>(m)))});
  return w;
}

inline weyl::WeylElement word_element(std::size_t m, const weyl::Word& w) {
  weyl::WeylElement e(m, 1);
  for (const auto& g : w) e = e * (g.is_d ? weyl::WeylElement::d(m, g.index) : weyl::WeylElement::z(m, g.index));
  return e;
}

inline weyl::Monomial random_monomial(std::size_t m, int max_exp) {
  weyl::Monomial mono(m);
  for (std::size_t i = 0; i < m; ++i) {
    mono.z(i) = uniform(0, max_exp);
    mono.d(i) = uniform(0, max_exp);
  }
  return mono;
}

inline weyl::WeylElement random_element(std::size_t m, int terms, int max_exp) {
  weyl::WeylElement e(m);
  for (int k = 0; k < terms; ++k) e += weyl::WeylElement(random_monomial(m, max_exp), weyl::Rational(uniform(-5, 5)));
  return e;
}

inline weyl::Polynomial random_polynomial(std::size_t m, int terms, int max_exp) {
  weyl::Polynomial p(m);
  for (int k = 0; k < terms; ++k) {
    weyl::Monomial mono(m);
    for (std::size_t i = 0; i < m; ++i) mono.z(i) = uniform(0, max_exp);
    p += weyl::Polynomial(mono, weyl::Rational(uniform(-5, 5)));
  }
  return p;
}

}  // namespace testing_support
