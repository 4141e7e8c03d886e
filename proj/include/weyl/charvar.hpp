#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/groebner.hpp"
#include "weyl/poly.hpp"

namespace weyl {

/// Symbol ideal of a left ideal under the Bernstein filtration, living in the
/// commutative ring on (z_1..z_m, zeta_1..zeta_m).
struct GradedIdeal {
  std::size_t ambient = 0;
  std::vector<Polynomial> generators;
  // Set when the ideal came from a left ideal of A_m; enables the Bernstein
  // inequality runtime check.
  bool from_weyl_ideal = false;
  std::string provenance;
};

/// Principal symbols of the reduced degree-compatible Groebner basis of `ideal`.
GradedIdeal graded_ideal(const WeylIdeal& ideal);

GradedIdeal graded_ideal_from(std::size_t m, std::vector<Polynomial> generators);

/// Minimal generators of the leading monomial ideal of a commutative
/// degrevlex Groebner basis of G.
std::vector<Monomial> leading_monomial_ideal(const GradedIdeal& g);

/// Dimension of V(M) for a monomial ideal: the largest set of variables that
/// contains the support of no generator.
int monomial_dimension(const std::vector<Monomial>& generators, std::size_t nvars);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of k[x]/M.
std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& generators, std::size_t nvars);

struct HilbertPolynomialData {
  int dimension = 0;
  mpz_class multiplicity;  // Q(1) where HS = Q(t)/(1-t)^dimension
};

HilbertPolynomialData hilbert_data(const std::vector<Monomial>& generators, std::size_t nvars);

/// Number of standard monomials of total degree exactly t (direct count).
mpz_class hilbert_function_count(const std::vector<Monomial>& generators, std::size_t nvars, int t);

int krull_dimension(const GradedIdeal& g);
mpz_class multiplicity(const GradedIdeal& g);

enum class Verdict { holonomic, non_holonomic };
enum class Simplicity { yes, no, undetermined };

struct HolonomicityCertificate {
  int dimension = 0;
  std::optional<mpz_class> multiplicity;
  Verdict verdict = Verdict::non_holonomic;
  Simplicity simple = Simplicity::undetermined;
  // Indices (1-based) i with z_i in the radical; with simple == yes the
  // characteristic variety is the conormal bundle of {z_i = 0, i in this set}.
  std::optional<std::vector<std::size_t>> conormal_subspace;
  std::string note;
};

/// Nilpotent-variable radical test: returns the constrained index set S when
/// rad(G) = <zeta_j (j not in S), z_i (i in S)>.
std::optional<std::vector<std::size_t>> coordinate_conormal_radical(const GradedIdeal& g);

HolonomicityCertificate simplicity_certificate(const WeylIdeal& ideal);

std::string to_string(Verdict v);
std::string to_string(Simplicity s);

}  // namespace weyl
