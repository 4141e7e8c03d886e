#pragma once

#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "weyl/poly.hpp"
#include "weyl/term_order.hpp"

namespace weyl {

template <class A>
struct GroebnerBasis {
  std::vector<Poly<A>> elements;  // reduced, monic, sorted by leading monomial
  TermOrder order;
  // cofactors[k][j]: left cofactor of generator j in elements[k]; filled only
  // when tracing was requested.
  std::vector<std::vector<Poly<A>>> cofactors;

  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

template <class A>
struct Reduction {
  Poly<A> remainder;
  std::vector<Poly<A>> quotients;  // a - remainder = sum quotients[k] * basis[k]
};

struct GroebnerOptions {
  bool trace = false;
  // 0 = unlimited. Overridden by the WEYL_GB_MAX_PAIRS environment variable.
  std::size_t max_pairs = 0;
};

class PairLimitExceeded : public std::runtime_error {
 public:
  explicit PairLimitExceeded(std::size_t n)
      : std::runtime_error("Groebner pair limit exceeded (" + std::to_string(n) + " pairs)") {}
};

namespace detail {

template <class A>
Reduction<A> reduce_impl(const Poly<A>& a, const std::vector<Poly<A>>& basis, const TermOrder& order, bool trace) {
  const std::size_t m = a.ambient();
  std::vector<std::pair<Monomial, Rational>> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis) {
    require_same_ambient(m, b.ambient());
    leads.push_back(b.leading(order));
  }
  Reduction<A> out{Poly<A>(m), {}};
  if (trace) out.quotients.assign(basis.size(), Poly<A>(m));

  std::map<Monomial, Rational, OrderLess> work(OrderLess{&order});
  for (const auto& [mono, c] : a.terms()) work.emplace(mono, c);

  auto accumulate = [&work](const Monomial& mono, const Rational& c) {
    auto [it, inserted] = work.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) work.erase(it);
    }
  };

  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial lead = top->first;
    const Rational coeff = top->second;
    std::size_t k = 0;
    while (k < leads.size() && !lead.divisible_by(leads[k].first)) ++k;
    if (k == leads.size()) {
      out.remainder.add_term(lead, coeff);
      work.erase(top);
      continue;
    }
    const Monomial q = lead - leads[k].first;
    const Rational c = coeff / leads[k].second;
    Poly<A> sub = times_left(q, c, basis[k]);
    for (const auto& [mono, sc] : sub.terms()) accumulate(mono, -sc);
    if (trace) out.quotients[k].add_term(q, c);
  }
  return out;
}

inline bool disjoint_indices(const TermMap& f, const TermMap& g, std::size_t m) {
  std::vector<bool> used(m, false);
  for (const auto& kv : f)
    for (std::size_t i = 0; i < m; ++i)
      if (kv.first.z(i) || kv.first.d(i)) used[i] = true;
  for (const auto& kv : g)
    for (std::size_t i = 0; i < m; ++i)
      if ((kv.first.z(i) || kv.first.d(i)) && used[i]) return false;
  return true;
}

inline std::size_t pair_limit(const GroebnerOptions& opts) {
  if (const char* env = std::getenv("WEYL_GB_MAX_PAIRS")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
    }
  }
  return opts.max_pairs;
}

}  // namespace detail

/// Remainder of `a` under left division by `basis`: highest term first, the
/// earliest basis element whose leading monomial divides it.
template <class A>
Poly<A> reduce(const Poly<A>& a, const std::vector<Poly<A>>& basis, const TermOrder& order) {
  return detail::reduce_impl(a, basis, order, false).remainder;
}

template <class A>
Reduction<A> reduce_traced(const Poly<A>& a, const std::vector<Poly<A>>& basis, const TermOrder& order) {
  return detail::reduce_impl(a, basis, order, true);
}

template <class A>
Poly<A> s_polynomial(const Poly<A>& f, const Poly<A>& g, const TermOrder& order) {
  auto [lf, cf] = f.leading(order);
  auto [lg, cg] = g.leading(order);
  Monomial l = lcm(lf, lg);
  return times_left(l - lf, Rational(1 / cf), f) - times_left(l - lg, Rational(1 / cg), g);
}

/// Reduced monic left Groebner basis of the left ideal generated by
/// `generators` (Buchberger, normal pair selection).
template <class A>
GroebnerBasis<A> buchberger(const std::vector<Poly<A>>& generators, const TermOrder& order,
                            const GroebnerOptions& opts = {}) {
  if (generators.empty()) throw std::invalid_argument("buchberger: no generators");
  const std::size_t m = generators.front().ambient();
  const std::size_t ngens = generators.size();
  const bool trace = opts.trace;
  const std::size_t limit = detail::pair_limit(opts);

  std::vector<Poly<A>> basis;
  std::vector<Monomial> leads;
  std::vector<std::vector<Poly<A>>> cof;

  auto unit_vector = [&](std::size_t j, const Rational& c) {
    std::vector<Poly<A>> v(ngens, Poly<A>(m));
    v[j] = Poly<A>(m, c);
    return v;
  };

  using PairKey = std::tuple<std::int64_t, Monomial, std::size_t, std::size_t>;
  auto pair_less = [&order](const PairKey& x, const PairKey& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    int c = order.compare(std::get<1>(x), std::get<1>(y));
    if (c != 0) return c < 0;
    return std::tie(std::get<3>(x), std::get<2>(x)) < std::tie(std::get<3>(y), std::get<2>(y));
  };
  std::set<PairKey, decltype(pair_less)> pairs(pair_less);

  // Elements whose leading monomial is divisible by a later one take part in
  // no new pairs (Gebauer-Moeller). The chain criterion holds in the Weyl
  // algebra; the coprime criterion only for commuting supports.
  std::vector<bool> redundant;

  auto add_element = [&](Poly<A> g, std::vector<Poly<A>> g_cof) {
    const Rational lc = g.leading_coefficient(order);
    const Rational inv = 1 / lc;
    g *= inv;
    if (trace)
      for (auto& c : g_cof) c *= inv;
    const Monomial lm = g.leading_monomial(order);
    const std::size_t k = basis.size();

    for (auto it = pairs.begin(); it != pairs.end();) {
      const auto& [deg, l, i, j] = *it;
      if (l.divisible_by(lm) && lcm(leads[i], lm) != l && lcm(leads[j], lm) != l)
        it = pairs.erase(it);
      else
        ++it;
    }

    std::vector<std::pair<Monomial, std::size_t>> fresh;
    for (std::size_t i = 0; i < k; ++i)
      if (!redundant[i]) fresh.emplace_back(lcm(leads[i], lm), i);
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
        if (a == b || drop[b]) continue;
        const Monomial& la = fresh[a].first;
        const Monomial& lb = fresh[b].first;
        if (la.divisible_by(lb) && (la != lb || b < a)) drop[a] = true;
      }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      const std::size_t i = fresh[a].second;
      if (coprime(leads[i], lm) && (A::commutative || detail::disjoint_indices(basis[i].terms(), g.terms(), m)))
        continue;
      pairs.emplace(fresh[a].first.total_degree(), fresh[a].first, i, k);
    }
    for (std::size_t i = 0; i < k; ++i)
      if (leads[i].divisible_by(lm)) redundant[i] = true;

    basis.push_back(std::move(g));
    leads.push_back(lm);
    redundant.push_back(false);
    if (trace) cof.push_back(std::move(g_cof));
  };

  for (std::size_t j = 0; j < ngens; ++j) {
    require_same_ambient(m, generators[j].ambient());
    if (generators[j].is_zero()) continue;
    add_element(generators[j], trace ? unit_vector(j, 1) : std::vector<Poly<A>>{});
  }

  std::size_t processed = 0;
  bool unit = false;
  for (const auto& b : basis)
    if (b.is_constant()) unit = true;

  while (!pairs.empty() && !unit) {
    auto [deg, l, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (limit != 0 && ++processed > limit) throw PairLimitExceeded(limit);

    const Monomial qi = l - leads[i], qj = l - leads[j];
    Poly<A> s = times_left(qi, Rational(1), basis[i]) - times_left(qj, Rational(1), basis[j]);
    if (!trace) {
      Poly<A> r = reduce(s, basis, order);
      if (r.is_zero()) continue;
      unit = r.is_constant();
      add_element(std::move(r), {});
    } else {
      Reduction<A> red = reduce_traced(s, basis, order);
      if (red.remainder.is_zero()) continue;
      std::vector<Poly<A>> rc(ngens, Poly<A>(m));
      Poly<A> mi(qi, 1), mj(qj, 1);
      for (std::size_t g = 0; g < ngens; ++g) {
        rc[g] = mi * cof[i][g] - mj * cof[j][g];
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (!red.quotients[k].is_zero()) rc[g] -= red.quotients[k] * cof[k][g];
      }
      unit = red.remainder.is_constant();
      add_element(std::move(red.remainder), std::move(rc));
    }
  }

  GroebnerBasis<A> out;
  out.order = order;

  if (unit) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!basis[k].is_constant()) continue;
      out.elements.push_back(Poly<A>(m, 1));
      if (trace) out.cofactors.push_back(cof[k]);
      break;
    }
    return out;
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool dominated = false;
    for (std::size_t o = 0; o < basis.size() && !dominated; ++o) {
      if (o == k || !leads[k].divisible_by(leads[o])) continue;
      if (leads[k] != leads[o] || o < k) dominated = true;
    }
    if (!dominated) keep.push_back(k);
  }
  std::sort(keep.begin(), keep.end(), [&](std::size_t x, std::size_t y) { return order.less(leads[x], leads[y]); });

  std::vector<Poly<A>> minimal;
  std::vector<std::vector<Poly<A>>> minimal_cof;
  for (std::size_t k : keep) {
    minimal.push_back(basis[k]);
    if (trace) minimal_cof.push_back(cof[k]);
  }

  // Tail-reduce each element against the others.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    auto [lm, lc] = minimal[k].leading(order);
    Poly<A> tail = minimal[k];
    tail.add_term(lm, -lc);
    std::vector<Poly<A>> others;
    std::vector<std::size_t> index;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) {
        others.push_back(minimal[o]);
        index.push_back(o);
      }
    Reduction<A> red = detail::reduce_impl(tail, others, order, trace);
    Poly<A> g = red.remainder;
    g.add_term(lm, lc);
    if (trace) {
      for (std::size_t q = 0; q < others.size(); ++q) {
        if (red.quotients[q].is_zero()) continue;
        for (std::size_t gi = 0; gi < ngens; ++gi) minimal_cof[k][gi] -= red.quotients[q] * minimal_cof[index[q]][gi];
      }
    }
    minimal[k] = std::move(g);
  }

  out.elements = std::move(minimal);
  if (trace) out.cofactors = std::move(minimal_cof);
  return out;
}

/// Post-hoc check: every S-polynomial (no criteria) reduces to zero.
template <class A>
bool verify_s_pairs(const GroebnerBasis<A>& gb) {
  const auto& g = gb.elements;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!reduce(s_polynomial(g[i], g[j], gb.order), g, gb.order).is_zero()) return false;
  return true;
}

/// Monic, no leading monomial divides another's, and no tail term is
/// divisible by any leading monomial.
template <class A>
bool is_reduced(const GroebnerBasis<A>& gb) {
  std::vector<Monomial> leads;
  for (const auto& e : gb.elements) {
    if (e.leading_coefficient(gb.order) != 1) return false;
    leads.push_back(e.leading_monomial(gb.order));
  }
  for (std::size_t k = 0; k < gb.elements.size(); ++k)
    for (const auto& [mono, c] : gb.elements[k].terms())
      for (std::size_t o = 0; o < leads.size(); ++o) {
        if (o == k && mono == leads[k]) continue;
        if (mono.divisible_by(leads[o])) return false;
      }
  return true;
}

/// Left ideal with a lazily computed, write-once Groebner basis cache.
template <class A>
class LeftIdeal {
 public:
  LeftIdeal(std::vector<Poly<A>> generators, TermOrder order = {})
      : generators_(std::move(generators)), order_(std::move(order)), cache_(std::make_shared<Cache>()) {
    if (generators_.empty()) throw std::invalid_argument("left ideal needs at least one generator");
    const std::size_t m = generators_.front().ambient();
    for (const auto& g : generators_) require_same_ambient(m, g.ambient());
  }

  std::size_t ambient() const { return generators_.front().ambient(); }
  const std::vector<Poly<A>>& generators() const { return generators_; }
  const TermOrder& order() const { return order_; }

  const GroebnerBasis<A>& groebner() const {
    std::call_once(cache_->once, [this] { cache_->gb = buchberger(generators_, order_); });
    return *cache_->gb;
  }

  Poly<A> reduce(const Poly<A>& a) const {
    require_same_ambient(ambient(), a.ambient());
    return weyl::reduce(a, groebner().elements, order_);
  }

  bool contains(const Poly<A>& a) const { return a.is_zero() || reduce(a).is_zero(); }

  bool is_proper() const { return !groebner().is_unit(); }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis<A>> gb;
  };

  std::vector<Poly<A>> generators_;
  TermOrder order_;
  std::shared_ptr<Cache> cache_;
};

using WeylIdeal = LeftIdeal<WeylAlgebra>;
using PolynomialIdeal = LeftIdeal<CommutativeRing>;

template <class A>
bool is_member(const Poly<A>& a, const LeftIdeal<A>& ideal) {
  return ideal.contains(a);
}

/// First generator of `inner` not in `outer`, if any.
template <class A>
std::optional<Poly<A>> containment_witness(const LeftIdeal<A>& outer, const std::vector<Poly<A>>& inner) {
  for (const auto& g : inner) {
    require_same_ambient(outer.ambient(), g.ambient());
    if (!outer.contains(g)) return g;
  }
  return std::nullopt;
}

/// J subset of I.
template <class A>
bool ideal_contains(const LeftIdeal<A>& outer, const LeftIdeal<A>& inner) {
  return !containment_witness(outer, inner.generators()).has_value();
}

template <class A>
bool ideal_equal(const LeftIdeal<A>& a, const LeftIdeal<A>& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

/// {g * r : g a generator of I}.
template <class A>
std::vector<Poly<A>> module_multiply_ideal(const LeftIdeal<A>& ideal, const Poly<A>& r) {
  if (r.is_zero()) throw ZeroElement("module_multiply_ideal");
  require_same_ambient(ideal.ambient(), r.ambient());
  std::vector<Poly<A>> out;
  for (const auto& g : ideal.generators()) out.push_back(g * r);
  return out;
}

}  // namespace weyl
