#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weyl/poly.hpp"

namespace weyl {

/// One generator symbol of A_m: z_index or d_index, 1-based.
struct Generator {
  bool is_d = false;
  std::size_t index = 1;
};

using Word = std::vector<Generator>;

/// Normal-ordered element equal to sum_k c_k * w_k, the words read as
/// noncommutative products in written order.
WeylElement normalize(std::size_t m, const std::vector<std::pair<Rational, Word>>& raw);

WeylElement commutator(const WeylElement& a, const WeylElement& b);

/// Bernstein total degree, max over terms of |zexp| + |dexp|.
std::int64_t bernstein_degree(const WeylElement& a);

/// Top Bernstein-degree part with d_i read as the commuting symbol zeta_i.
Polynomial principal_symbol(const WeylElement& a);

/// Reads a normal-ordered element as a commutative polynomial, term by term.
Polynomial as_commutative(const WeylElement& a);

/// Inverse of as_commutative: every monomial becomes the normal-ordered word
/// z^a d^b.
WeylElement as_normal_ordered(const Polynomial& p);

}  // namespace weyl
