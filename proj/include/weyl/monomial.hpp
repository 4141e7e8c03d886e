#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl {

using Exponent = std::int32_t;

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow();
  return r;
}

// Exponent vector over m variable pairs. Slots [0, m) are the z exponents,
// slots [m, 2m) the d exponents (or the commuting symbols zeta in the
// commutative symbol ring). Both rings share this layout.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t m) : exps_(2 * m, 0) {}
  Monomial(std::vector<Exponent> z, const std::vector<Exponent>& d) : exps_(std::move(z)) {
    require_same_ambient(exps_.size(), d.size());
    exps_.insert(exps_.end(), d.begin(), d.end());
  }

  static Monomial from_flat(std::vector<Exponent> flat) {
    Monomial mono;
    mono.exps_ = std::move(flat);
    return mono;
  }

  std::size_t ambient() const { return exps_.size() / 2; }
  std::size_t size() const { return exps_.size(); }

  /// Exponent of z_i, 0-based.
  Exponent z(std::size_t i) const { return exps_[i]; }
  Exponent d(std::size_t i) const { return exps_[ambient() + i]; }
  Exponent& z(std::size_t i) { return exps_[i]; }
  Exponent& d(std::size_t i) { return exps_[ambient() + i]; }

  Exponent operator[](std::size_t k) const { return exps_[k]; }
  Exponent& operator[](std::size_t k) { return exps_[k]; }

  const std::vector<Exponent>& flat() const { return exps_; }

  std::int64_t total_degree() const {
    std::int64_t s = 0;
    for (Exponent e : exps_) s += e;
    return s;
  }

  bool is_one() const {
    for (Exponent e : exps_)
      if (e != 0) return false;
    return true;
  }

  /// True when every exponent of `other` is <= the matching exponent here.
  bool divisible_by(const Monomial& other) const {
    for (std::size_t k = 0; k < exps_.size(); ++k)
      if (other.exps_[k] > exps_[k]) return false;
    return true;
  }

  friend Monomial operator+(const Monomial& a, const Monomial& b) {
    require_same_ambient(a.size(), b.size());
    Monomial r = a;
    for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] = checked_add(a.exps_[k], b.exps_[k]);
    return r;
  }

  /// a - b; requires a divisible by b.
  friend Monomial operator-(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] = a.exps_[k] - b.exps_[k];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] = std::max(a.exps_[k], b.exps_[k]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.exps_.size(); ++k)
      if (a.exps_[k] != 0 && b.exps_[k] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

}  // namespace weyl
