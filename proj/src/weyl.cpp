#include "weyl/weyl.hpp"

#include <algorithm>

namespace weyl {

WeylElement normalize(std::size_t m, const std::vector<std::pair<Rational, Word>>& raw) {
  WeylElement sum(m);
  for (const auto& [c, word] : raw) {
    WeylElement prod(m, 1);
    for (const Generator& g : word) prod = prod * (g.is_d ? WeylElement::d(m, g.index) : WeylElement::z(m, g.index));
    sum += prod * c;
  }
  return sum;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

std::int64_t bernstein_degree(const WeylElement& a) {
  if (a.is_zero()) throw ZeroElement("bernstein_degree");
  std::int64_t best = 0;
  for (const auto& [mono, c] : a.terms()) best = std::max(best, mono.total_degree());
  return best;
}

Polynomial principal_symbol(const WeylElement& a) {
  const std::int64_t top = bernstein_degree(a);
  Polynomial sym(a.ambient());
  for (const auto& [mono, c] : a.terms())
    if (mono.total_degree() == top) sym.add_term(mono, c);
  return sym;
}

Polynomial as_commutative(const WeylElement& a) {
  Polynomial p(a.ambient());
  for (const auto& [mono, c] : a.terms()) p.add_term(mono, c);
  return p;
}

WeylElement as_normal_ordered(const Polynomial& p) {
  WeylElement a(p.ambient());
  for (const auto& [mono, c] : p.terms()) a.add_term(mono, c);
  return a;
}

}  // namespace weyl
