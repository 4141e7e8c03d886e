#include "weyl/delta_module.hpp"

#include <stdexcept>

#include "weyl/parser.hpp"
#include "weyl/weyl.hpp"

namespace weyl {

DeltaModule::DeltaModule(std::size_t m, std::set<std::size_t> constrained) : m_(m), s_(std::move(constrained)) {
  for (std::size_t i : s_)
    if (i < 1 || i > m) throw std::out_of_range("delta index " + std::to_string(i) + " out of range");
}

WeylIdeal DeltaModule::presentation() const {
  std::vector<WeylElement> gens;
  for (std::size_t i = 1; i <= m_; ++i)
    gens.push_back(is_constrained(i) ? WeylElement::z(m_, i) : WeylElement::d(m_, i));
  return WeylIdeal(std::move(gens));
}

DeltaSection delta(const DeltaModule& module) {
  return DeltaSection{module, Polynomial(module.ambient(), 1)};
}

PolynomialSection polynomial_section(const Polynomial& p) {
  for (const auto& [mono, c] : p.terms())
    for (std::size_t i = 0; i < p.ambient(); ++i)
      if (mono.d(i) != 0) throw std::invalid_argument("polynomial section must not involve d symbols");
  return DeltaSection{DeltaModule(p.ambient(), {}), p};
}

namespace {

// Falling factorial e (e-1) ... (e-k+1).
mpz_class falling(Exponent e, Exponent k) {
  mpz_class r = 1;
  for (Exponent j = 0; j < k; ++j) r *= e - j;
  return r;
}

}  // namespace

DeltaSection act(const WeylElement& a, const DeltaSection& s) {
  const DeltaModule& mod = s.module;
  require_same_ambient(mod.ambient(), a.ambient());
  const std::size_t m = mod.ambient();
  Polynomial out(m);
  for (const auto& [op, oc] : a.terms()) {
    for (const auto& [sec, sc] : s.poly.terms()) {
      Monomial r = sec;
      Rational c = oc * sc;
      bool zero = false;
      // z^a d^b acts as d^b first, then z^a; different variables commute.
      for (std::size_t i = 0; i < m && !zero; ++i) {
        const Exponent a_exp = op.z(i), b_exp = op.d(i);
        if (!mod.is_constrained(i + 1)) {
          Exponent e = r.z(i);
          if (b_exp > e) {
            zero = true;
            break;
          }
          c *= Rational(falling(e, b_exp));
          r.z(i) = checked_add(e - b_exp, a_exp);
        } else {
          // d_i multiplies the symbol; z_i d_i^k delta = -k d_i^(k-1) delta.
          Exponent k = checked_add(r.d(i), b_exp);
          if (a_exp > k) {
            zero = true;
            break;
          }
          c *= Rational(falling(k, a_exp));
          if (a_exp % 2) c = -c;
          r.d(i) = k - a_exp;
        }
      }
      if (!zero) out.add_term(r, c);
    }
  }
  return DeltaSection{mod, std::move(out)};
}

PolynomialSection act_on_polynomial(const WeylElement& a, const PolynomialSection& p) {
  if (!p.module.constrained().empty()) throw std::invalid_argument("act_on_polynomial: not a polynomial section");
  return act(a, p);
}

std::optional<WeylElement> first_non_annihilating(const std::vector<WeylElement>& gens, const DeltaSection& s) {
  for (const auto& g : gens)
    if (!act(g, s).is_zero()) return g;
  return std::nullopt;
}

bool annihilates(const std::vector<WeylElement>& gens, const DeltaSection& s) {
  return !first_non_annihilating(gens, s).has_value();
}

AnnihilatorCertificate certify_annihilator(const WeylIdeal& ideal, const DeltaSection& s) {
  AnnihilatorCertificate cert;
  cert.failing_generator = first_non_annihilating(ideal.generators(), s);
  cert.generators_annihilate = !cert.failing_generator.has_value();
  cert.section_nonzero = !s.is_zero();
  if (!ideal.is_proper()) {
    cert.failed_check = "proper ideal";
    return cert;
  }
  cert.simplicity = simplicity_certificate(ideal);
  if (!cert.generators_annihilate)
    cert.failed_check = "generators_annihilate";
  else if (!cert.section_nonzero)
    cert.failed_check = "section_nonzero";
  else if (cert.simplicity.simple != Simplicity::yes)
    cert.failed_check = "simplicity";
  else
    cert.conclusion = CertificateConclusion::equality;
  return cert;
}

PolynomialSection fourier_image(const PartialFourierSpec& spec, const DeltaSection& s) {
  require_same_ambient(spec.ambient(), s.module.ambient());
  if (spec.indices() != s.module.constrained())
    throw std::invalid_argument("fourier transform subset does not match the delta module");
  const std::size_t m = spec.ambient();
  Polynomial out(m);
  for (const auto& [mono, c] : s.poly.terms()) {
    Monomial r(m);
    Rational coeff = c;
    for (std::size_t i = 0; i < m; ++i) {
      r.z(i) = checked_add(mono.z(i), mono.d(i));
      if (mono.d(i) % 2) coeff = -coeff;
    }
    out.add_term(r, coeff);
  }
  return polynomial_section(out);
}

bool fourier_transport_check(const PartialFourierSpec& spec, const WeylIdeal& ideal, const DeltaSection& s,
                             const PolynomialSection& p) {
  require_same_ambient(spec.ambient(), ideal.ambient());
  if (spec.indices() != s.module.constrained())
    throw std::invalid_argument("fourier transform subset does not match the delta module");
  for (const auto& g : ideal.generators())
    if (!act_on_polynomial(partial_fourier(spec, g), p).is_zero()) return false;
  return true;
}

WeylElement interpolation_lift(const std::vector<std::pair<int, WeylElement>>& targets, int lmax,
                               std::size_t variable) {
  if (targets.empty()) throw std::invalid_argument("interpolation_lift: no targets");
  const std::size_t m = targets.front().second.ambient();
  std::set<int> seen;
  for (const auto& [l, p] : targets) {
    if (l < 0 || l > lmax) throw std::invalid_argument("interpolation_lift: index outside 0..Lmax");
    if (!seen.insert(l).second) throw std::invalid_argument("interpolation_lift: duplicate l = " + std::to_string(l));
    require_same_ambient(m, p.ambient());
  }
  const WeylElement euler = WeylElement::z(m, variable) * WeylElement::d(m, variable);
  WeylElement sum(m);
  for (const auto& [l, p] : targets) {
    if (p.is_zero()) continue;
    WeylElement term = p;
    for (int k = 0; k <= lmax; ++k) {
      if (k == l) continue;
      term = term * ((euler - WeylElement(m, k)) * make_rational(1, l - k));
    }
    sum += term;
  }
  return sum;
}

std::string to_string(const DeltaSection& s) {
  std::string body = to_string(as_normal_ordered(s.poly));
  if (s.module.constrained().empty()) return body;
  std::string d = "delta(";
  bool first = true;
  for (std::size_t i : s.module.constrained()) {
    d += (first ? "z" : ",z") + std::to_string(i);
    first = false;
  }
  d += ")";
  return "(" + body + ")*" + d;
}

}  // namespace weyl
