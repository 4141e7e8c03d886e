#pragma once

#include <gmpxx.h>

#include <string>

namespace weyl {

/// Exact rational scalar. Always kept in canonical (reduced, positive
/// denominator) form.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace weyl
