#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/monomial.hpp"
#include "weyl/rational.hpp"
#include "weyl/term_order.hpp"

namespace weyl {

using TermMap = std::map<Monomial, Rational>;

namespace detail {

inline void add_to(TermMap& terms, const Monomial& mono, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

}  // namespace detail

/// Normal-ordered Weyl algebra product: z^a d^b * z^c d^e = z^a (d^b z^c) d^e,
/// expanded per variable with d^p z^q = sum_k k! C(p,k) C(q,k) z^(q-k) d^(p-k).
struct WeylAlgebra {
  static constexpr const char* name = "weyl";
  static constexpr bool commutative = false;

  static void multiply_monomials(const Monomial& a, const Monomial& b, const Rational& c, TermMap& out) {
    const std::size_t m = a.ambient();
    Monomial base = a + b;
    // Variables where a d-power meets a z-power produce correction terms.
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < m; ++i)
      if (a.d(i) > 0 && b.z(i) > 0) active.push_back(i);
    if (active.empty()) {
      detail::add_to(out, base, c);
      return;
    }
    expand(active, 0, a, b, base, Rational(c), out);
  }

 private:
  static void expand(const std::vector<std::size_t>& active, std::size_t pos, const Monomial& a,
                     const Monomial& b, Monomial& cur, const Rational& coeff, TermMap& out) {
    if (pos == active.size()) {
      detail::add_to(out, cur, coeff);
      return;
    }
    const std::size_t i = active[pos];
    const Exponent p = a.d(i), q = b.z(i);
    const Exponent kmax = std::min(p, q);
    const Exponent z0 = cur.z(i), d0 = cur.d(i);
    // t_k = k! C(p,k) C(q,k);  t_{k+1} = t_k (p-k)(q-k)/(k+1)
    mpz_class t = 1;
    for (Exponent k = 0; k <= kmax; ++k) {
      cur.z(i) = z0 - k;
      cur.d(i) = d0 - k;
      expand(active, pos + 1, a, b, cur, coeff * Rational(t), out);
      t = t * (p - k) * (q - k) / (k + 1);
    }
    cur.z(i) = z0;
    cur.d(i) = d0;
  }
};

/// Commutative polynomial ring on the same 2m exponent slots.
struct CommutativeRing {
  static constexpr const char* name = "commutative";
  static constexpr bool commutative = true;

  static void multiply_monomials(const Monomial& a, const Monomial& b, const Rational& c, TermMap& out) {
    detail::add_to(out, a + b, c);
  }
};

/// Sparse element of the ring `Algebra` over exact rationals. Terms are
/// stored in a map keyed lexicographically by exponent vector, so equality
/// is structural; term orders are applied on demand.
template <class Algebra>
class Poly {
 public:
  using algebra_type = Algebra;

  Poly() = default;
  explicit Poly(std::size_t m) : m_(m) {}
  Poly(std::size_t m, const Rational& c) : m_(m) { detail::add_to(terms_, Monomial(m), c); }
  Poly(const Monomial& mono, const Rational& c) : m_(mono.ambient()) { detail::add_to(terms_, mono, c); }

  static Poly constant(std::size_t m, const Rational& c) { return Poly(m, c); }

  /// z_index, 1-based.
  static Poly z(std::size_t m, std::size_t index) {
    check_index(m, index);
    Monomial mono(m);
    mono.z(index - 1) = 1;
    return Poly(mono, 1);
  }

  /// d_index (the derivation, or zeta_index in the symbol ring), 1-based.
  static Poly d(std::size_t m, std::size_t index) {
    check_index(m, index);
    Monomial mono(m);
    mono.d(index - 1) = 1;
    return Poly(mono, 1);
  }

  std::size_t ambient() const { return m_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& mono, const Rational& c) {
    require_same_ambient(m_, mono.ambient());
    detail::add_to(terms_, mono, c);
  }

  /// Leading term under `order`; throws on zero.
  std::pair<Monomial, Rational> leading(const TermOrder& order) const {
    if (terms_.empty()) throw ZeroElement("leading term");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
  }

  Monomial leading_monomial(const TermOrder& order) const { return leading(order).first; }
  Rational leading_coefficient(const TermOrder& order) const { return leading(order).second; }

  Poly monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_coefficient(order));
  }

  Poly& operator+=(const Poly& o) {
    require_same_ambient(m_, o.m_);
    for (const auto& [mono, c] : o.terms_) detail::add_to(terms_, mono, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_ambient(m_, o.m_);
    for (const auto& [mono, c] : o.terms_) detail::add_to(terms_, mono, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_ambient(a.m_, b.m_);
    Poly r(a.m_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) Algebra::multiply_monomials(ma, mb, ca * cb, r.terms_);
    return r;
  }

  /// c * mono * b (left multiplication by a single term).
  friend Poly times_left(const Monomial& mono, const Rational& c, const Poly& b) {
    Poly r(b.m_);
    for (const auto& [mb, cb] : b.terms_) Algebra::multiply_monomials(mono, mb, c * cb, r.terms_);
    return r;
  }

  /// b * (c * mono) (right multiplication by a single term).
  friend Poly times_right(const Poly& b, const Monomial& mono, const Rational& c) {
    Poly r(b.m_);
    for (const auto& [mb, cb] : b.terms_) Algebra::multiply_monomials(mb, mono, c * cb, r.terms_);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }

 private:
  static void check_index(std::size_t m, std::size_t index) {
    if (index < 1 || index > m)
      throw std::out_of_range("index " + std::to_string(index) + " out of range 1.." + std::to_string(m));
  }

  std::size_t m_ = 0;
  TermMap terms_;
};

using WeylElement = Poly<WeylAlgebra>;
/// Commutative polynomial in (z_1..z_m, zeta_1..zeta_m).
using Polynomial = Poly<CommutativeRing>;

template <class A>
Poly<A> pow(const Poly<A>& a, unsigned e) {
  Poly<A> r(a.ambient(), 1);
  Poly<A> base = a;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

}  // namespace weyl
