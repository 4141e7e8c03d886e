#include "weyl/charvar.hpp"

#include <algorithm>
#include <stdexcept>

#include "weyl/parser.hpp"
#include "weyl/weyl.hpp"

namespace weyl {

GradedIdeal graded_ideal(const WeylIdeal& ideal) {
  if (!ideal.order().degree_compatible())
    throw std::invalid_argument("graded_ideal: term order must refine total degree");
  const auto& gb = ideal.groebner();
  if (gb.is_unit()) throw ImproperIdeal("graded_ideal");
  GradedIdeal g;
  g.ambient = ideal.ambient();
  g.from_weyl_ideal = true;
  g.provenance = "symbols of reduced " + ideal.order().name() + " Groebner basis";
  for (const auto& e : gb.elements) g.generators.push_back(principal_symbol(e));
  return g;
}

GradedIdeal graded_ideal_from(std::size_t m, std::vector<Polynomial> generators) {
  GradedIdeal g;
  g.ambient = m;
  g.generators = std::move(generators);
  g.provenance = "explicit";
  return g;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return g.divisible_by(h); })) out.push_back(g);
  return out;
}

using IntPoly = std::vector<mpz_class>;

IntPoly sub_shifted(IntPoly a, const IntPoly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= b[k];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

IntPoly numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    IntPoly n{1};
    for (const auto& g : gens) n = sub_shifted(n, n, static_cast<std::size_t>(g.total_degree()));
    return n;
  }
  // N(M + <g>) = N(M) - t^deg(g) N(M : g)
  Monomial g = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& h : gens) colon.push_back(lcm(h, g) - g);
  IntPoly base = numerator_rec(gens);
  IntPoly quot = numerator_rec(std::move(colon));
  return sub_shifted(base, quot, static_cast<std::size_t>(g.total_degree()));
}

void check_improper(const std::vector<Monomial>& lead, const char* op) {
  for (const auto& mono : lead)
    if (mono.is_one()) throw ImproperIdeal(op);
}

}  // namespace

std::vector<Monomial> leading_monomial_ideal(const GradedIdeal& g) {
  if (g.generators.empty()) return {};
  std::vector<Polynomial> nonzero;
  for (const auto& p : g.generators)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) return {};
  TermOrder order;
  auto gb = buchberger(nonzero, order);
  std::vector<Monomial> lead;
  for (const auto& e : gb.elements) lead.push_back(e.leading_monomial(order));
  return minimalize(std::move(lead));
}

int monomial_dimension(const std::vector<Monomial>& generators, std::size_t nvars) {
  if (nvars > 24) throw std::invalid_argument("monomial_dimension: too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : generators) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < nvars; ++k)
      if (g[k] > 0) mask |= 1u << k;
    if (mask == 0) return -1;  // unit ideal, empty variety
    supports.push_back(mask);
  }
  int best = 0;
  const std::uint32_t full = nvars == 32 ? ~0u : (1u << nvars);
  for (std::uint32_t u = 0; u < full; ++u) {
    int size = __builtin_popcount(u);
    if (size <= best) continue;
    if (std::all_of(supports.begin(), supports.end(), [u](std::uint32_t s) { return (s & ~u) != 0; })) best = size;
  }
  return best;
}

std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& generators, std::size_t nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) throw std::invalid_argument("hilbert_numerator: variable count mismatch");
  return numerator_rec(generators);
}

HilbertPolynomialData hilbert_data(const std::vector<Monomial>& generators, std::size_t nvars) {
  IntPoly n = hilbert_numerator(generators, nvars);
  auto at_one = [](const IntPoly& p) {
    mpz_class s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  std::size_t divisions = 0;
  while (at_one(n) == 0) {
    if (n.size() == 1 && n[0] == 0) throw ImproperIdeal("hilbert_data");
    // n = (1 - t) q  =>  q_k = sum_{i<=k} n_i
    IntPoly q(n.size() - 1);
    mpz_class acc = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      acc += n[k];
      q[k] = acc;
    }
    n = std::move(q);
    ++divisions;
  }
  HilbertPolynomialData data;
  data.dimension = static_cast<int>(nvars - divisions);
  data.multiplicity = at_one(n);
  return data;
}

mpz_class hilbert_function_count(const std::vector<Monomial>& generators, std::size_t nvars, int t) {
  mpz_class count = 0;
  std::vector<Exponent> exps(nvars, 0);
  // Enumerate compositions of t into nvars parts.
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k + 1 == nvars) {
      exps[k] = left;
      Monomial mono = Monomial::from_flat(exps);
      if (std::none_of(generators.begin(), generators.end(), [&](const Monomial& g) { return mono.divisible_by(g); }))
        ++count;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[k] = e;
      self(self, k + 1, left - e);
    }
  };
  if (nvars == 0) return t == 0 ? 1 : 0;
  rec(rec, 0, t);
  return count;
}

int krull_dimension(const GradedIdeal& g) {
  auto lead = leading_monomial_ideal(g);
  check_improper(lead, "krull_dimension");
  int dim = monomial_dimension(lead, 2 * g.ambient);
  if (g.from_weyl_ideal && dim < static_cast<int>(g.ambient))
    throw std::logic_error("Bernstein inequality violated: dimension " + std::to_string(dim) + " < " +
                           std::to_string(g.ambient));
  return dim;
}

mpz_class multiplicity(const GradedIdeal& g) {
  auto lead = leading_monomial_ideal(g);
  check_improper(lead, "multiplicity");
  return hilbert_data(lead, 2 * g.ambient).multiplicity;
}

std::optional<std::vector<std::size_t>> coordinate_conormal_radical(const GradedIdeal& g) {
  const std::size_t m = g.ambient;
  std::vector<Polynomial> nonzero;
  for (const auto& p : g.generators)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) return std::nullopt;
  TermOrder order;
  auto gb = buchberger(nonzero, order);
  if (gb.is_unit()) return std::nullopt;

  std::int64_t bound = 1;
  for (const auto& e : gb.elements) bound += e.leading_monomial(order).total_degree();
  bound = std::min<std::int64_t>(bound, 64);

  std::vector<bool> nilpotent(2 * m, false);
  for (std::size_t k = 0; k < 2 * m; ++k) {
    Monomial mono(m);
    for (std::int64_t e = 1; e <= bound; ++e) {
      mono[k] = static_cast<Exponent>(e);
      if (reduce(Polynomial(mono, 1), gb.elements, order).is_zero()) {
        nilpotent[k] = true;
        break;
      }
    }
  }
  std::vector<std::size_t> constrained;
  for (std::size_t i = 0; i < m; ++i) {
    if (nilpotent[i] == nilpotent[m + i]) return std::nullopt;
    if (nilpotent[i]) constrained.push_back(i + 1);
  }
  // G must lie in the candidate prime: every monomial meets a nilpotent variable.
  for (const auto& p : nonzero)
    for (const auto& [mono, c] : p.terms()) {
      bool meets = false;
      for (std::size_t k = 0; k < 2 * m && !meets; ++k) meets = nilpotent[k] && mono[k] > 0;
      if (!meets) return std::nullopt;
    }
  return constrained;
}

HolonomicityCertificate simplicity_certificate(const WeylIdeal& ideal) {
  GradedIdeal g = graded_ideal(ideal);
  auto lead = leading_monomial_ideal(g);
  check_improper(lead, "simplicity_certificate");
  HolonomicityCertificate cert;
  cert.dimension = krull_dimension(g);
  const int m = static_cast<int>(ideal.ambient());
  cert.verdict = cert.dimension == m ? Verdict::holonomic : Verdict::non_holonomic;
  if (cert.verdict == Verdict::non_holonomic) {
    cert.simple = Simplicity::no;
    cert.note = "characteristic variety has dimension " + std::to_string(cert.dimension) + " > " + std::to_string(m);
    return cert;
  }
  cert.multiplicity = hilbert_data(lead, 2 * ideal.ambient()).multiplicity;
  if (*cert.multiplicity != 1) {
    cert.note = "multiplicity " + cert.multiplicity->get_str() + " > 1";
    return cert;
  }
  cert.conormal_subspace = coordinate_conormal_radical(g);
  if (!cert.conormal_subspace) {
    cert.note = "radical is not a coordinate conormal ideal";
    return cert;
  }
  cert.simple = Simplicity::yes;
  return cert;
}

std::string to_string(Verdict v) { return v == Verdict::holonomic ? "holonomic" : "non-holonomic"; }

std::string to_string(Simplicity s) {
  switch (s) {
    case Simplicity::yes: return "yes";
    case Simplicity::no: return "no";
    case Simplicity::undetermined: return "undetermined";
  }
  return "?";
}

}  // namespace weyl
