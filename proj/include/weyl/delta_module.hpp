#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weyl/charvar.hpp"
#include "weyl/fourier.hpp"
#include "weyl/groebner.hpp"
#include "weyl/poly.hpp"

namespace weyl {

// B_{Y|X} for the coordinate subspace Y = {z_i = 0 : i in S}, realized as the
// free module of polynomials in z_j (j not in S) and d_i (i in S) applied to
// delta. With S empty this is O_X, the polynomial module.
class DeltaModule {
 public:
  DeltaModule(std::size_t m, std::set<std::size_t> constrained);

  std::size_t ambient() const { return m_; }
  const std::set<std::size_t>& constrained() const { return s_; }
  bool is_constrained(std::size_t index) const { return s_.count(index) != 0; }

  /// Presentation ideal D/(D d_j (j not in S) + D z_i (i in S)).
  WeylIdeal presentation() const;

  friend bool operator==(const DeltaModule&, const DeltaModule&) = default;

 private:
  std::size_t m_;
  std::set<std::size_t> s_;
};

// A section p * delta. `poly` uses the shared exponent layout: z slots for the
// free coordinates, d slots for the delta-side derivative symbols. Slots not
// allowed by the module stay zero.
struct DeltaSection {
  DeltaModule module;
  Polynomial poly;

  bool is_zero() const { return poly.is_zero(); }
  friend bool operator==(const DeltaSection&, const DeltaSection&) = default;
};

/// Element of O_X.
using PolynomialSection = DeltaSection;

/// The generator delta (class of 1).
DeltaSection delta(const DeltaModule& module);

/// Polynomial p in O_X; p must not involve d slots.
PolynomialSection polynomial_section(const Polynomial& p);

DeltaSection act(const WeylElement& a, const DeltaSection& s);
PolynomialSection act_on_polynomial(const WeylElement& a, const PolynomialSection& p);

/// First generator with act(g, s) != 0, if any.
std::optional<WeylElement> first_non_annihilating(const std::vector<WeylElement>& gens, const DeltaSection& s);
bool annihilates(const std::vector<WeylElement>& gens, const DeltaSection& s);

enum class CertificateConclusion { equality, inconclusive };

struct AnnihilatorCertificate {
  bool generators_annihilate = false;
  bool section_nonzero = false;
  HolonomicityCertificate simplicity;
  CertificateConclusion conclusion = CertificateConclusion::inconclusive;
  std::optional<WeylElement> failing_generator;
  std::string failed_check;  // empty on equality
};

/// Ann(s) = I when the generators of I kill s, s != 0, and D/I is simple.
AnnihilatorCertificate certify_annihilator(const WeylIdeal& ideal, const DeltaSection& s);

/// Image of a delta section under the partial Fourier transform on S:
/// d_i delta (i in S) -> -z_i, free z_j unchanged.
PolynomialSection fourier_image(const PartialFourierSpec& spec, const DeltaSection& s);

/// Every generator of I, transported by the transform, kills p.
bool fourier_transport_check(const PartialFourierSpec& spec, const WeylIdeal& ideal, const DeltaSection& s,
                             const PolynomialSection& p);

/// P = sum_l P_l prod_{k != l, 0 <= k <= lmax} (z1 d1 - k)/(l - k). `variable`
/// selects which z_i d_i plays the Euler role (1-based, default 1).
WeylElement interpolation_lift(const std::vector<std::pair<int, WeylElement>>& targets, int lmax,
                               std::size_t variable = 1);

std::string to_string(const DeltaSection& s);

}  // namespace weyl
