#include "weyl/lie.hpp"

#include <cctype>
#include <stdexcept>

#include "weyl/parser.hpp"

namespace weyl {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

RationalMatrix RationalMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("matrix unit index out of range");
  RationalMatrix r(n, n);
  r(i - 1, j - 1) = 1;
  return r;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

namespace {

void require_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_shape(a, b);
  RationalMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_shape(a, b);
  RationalMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  RationalMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

RationalMatrix operator*(const Rational& s, RationalMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

std::size_t rank(RationalMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && sgn(a(pivot, c)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  RationalMatrix w = a, inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(w(pivot, c)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(w(c, j), w(pivot, j));
      std::swap(inv(c, j), inv(pivot, j));
    }
    Rational p = w(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      w(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(w(i, c)) == 0) continue;
      Rational f = w(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalMatrix conjugate(const RationalMatrix& a, const RationalMatrix& c) {
  auto ci = inverse(c);
  if (!ci) throw std::invalid_argument("conjugate: singular matrix");
  return c * a * *ci;
}

RationalMatrix parse_matrix_expression(std::string_view text, std::size_t n) {
  RationalMatrix out(n, n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, pos); };
  auto number = [&]() -> long {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stol(std::string(text.substr(start, pos - start)));
  };
  bool first = true;
  for (;;) {
    skip();
    if (pos >= text.size()) {
      if (first) fail("empty matrix expression");
      break;
    }
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = Rational(number());
      skip();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        long den = number();
        if (den == 0) fail("division by zero");
        coeff /= Rational(den);
        skip();
      }
      if (pos >= text.size() || text[pos] != '*') fail("expected '*'");
      ++pos;
      skip();
    }
    if (pos >= text.size() || text[pos] != 'E') fail("expected matrix unit E");
    ++pos;
    std::size_t i = 0, j = 0;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      i = static_cast<std::size_t>(number());
      skip();
      if (pos >= text.size() || text[pos] != ',') fail("expected ','");
      ++pos;
      j = static_cast<std::size_t>(number());
      skip();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
    } else {
      if (pos + 2 > text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])) ||
          !std::isdigit(static_cast<unsigned char>(text[pos + 1])))
        fail("expected two index digits");
      i = static_cast<std::size_t>(text[pos] - '0');
      j = static_cast<std::size_t>(text[pos + 1] - '0');
      pos += 2;
    }
    if (i < 1 || j < 1 || i > n || j > n) fail("matrix unit index out of range");
    out(i - 1, j - 1) += sign * coeff;
  }
  return out;
}

std::optional<std::vector<Rational>> span_coordinates(const std::vector<RationalMatrix>& basis,
                                                      const RationalMatrix& target) {
  const std::size_t k = basis.size();
  const std::size_t len = target.rows() * target.cols();
  // Augmented system: columns are flattened basis elements, last column the target.
  RationalMatrix sys(len, k + 1);
  for (std::size_t b = 0; b < k; ++b) {
    require_shape(basis[b], target);
    for (std::size_t r = 0; r < target.rows(); ++r)
      for (std::size_t c = 0; c < target.cols(); ++c) sys(r * target.cols() + c, b) = basis[b](r, c);
  }
  for (std::size_t r = 0; r < target.rows(); ++r)
    for (std::size_t c = 0; c < target.cols(); ++c) sys(r * target.cols() + c, k) = target(r, c);

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < len; ++c) {
    std::size_t p = row;
    while (p < len && sgn(sys(p, c)) == 0) ++p;
    if (p == len) continue;
    for (std::size_t j = 0; j <= k; ++j) std::swap(sys(row, j), sys(p, j));
    Rational piv = sys(row, c);
    for (std::size_t j = 0; j <= k; ++j) sys(row, j) /= piv;
    for (std::size_t i = 0; i < len; ++i) {
      if (i == row || sgn(sys(i, c)) == 0) continue;
      Rational f = sys(i, c);
      for (std::size_t j = 0; j <= k; ++j) sys(i, j) -= f * sys(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < len; ++i)
    if (sgn(sys(i, k)) != 0) return std::nullopt;
  std::vector<Rational> coords(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = sys(r, k);
  return coords;
}

LieSubalgebra realize(const LieSubalgebra& h, const RationalMatrix& c, std::string name) {
  LieSubalgebra out{name.empty() ? h.name : std::move(name), {}};
  for (const auto& b : h.basis) out.basis.push_back(conjugate(b, c));
  return out;
}

bool linearly_independent(const std::vector<RationalMatrix>& basis) {
  if (basis.empty()) return true;
  const auto& f = basis.front();
  RationalMatrix m(basis.size(), f.rows() * f.cols());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    require_shape(basis[b], f);
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) m(b, r * f.cols() + c) = basis[b](r, c);
  }
  return rank(m) == basis.size();
}

bool is_subalgebra(const std::vector<RationalMatrix>& basis) {
  for (const auto& b : basis)
    if (!b.square() || b.rows() != basis.front().rows()) throw std::invalid_argument("is_subalgebra: dimension mismatch");
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!span_coordinates(basis, bracket(basis[i], basis[j]))) return false;
  return true;
}

Rational evaluate(const Character& chi, const LieSubalgebra& h, const RationalMatrix& x) {
  if (chi.values.size() != h.basis.size()) throw std::invalid_argument("character/basis size mismatch");
  auto coords = span_coordinates(h.basis, x);
  if (!coords) throw std::invalid_argument("element outside the subalgebra " + h.name);
  Rational v = 0;
  for (std::size_t k = 0; k < coords->size(); ++k) v += (*coords)[k] * chi.values[k];
  return v;
}

bool vanishes_on_brackets(const Character& chi, const LieSubalgebra& h) {
  for (std::size_t i = 0; i < h.basis.size(); ++i)
    for (std::size_t j = i + 1; j < h.basis.size(); ++j)
      if (sgn(evaluate(chi, h, bracket(h.basis[i], h.basis[j]))) != 0) return false;
  return true;
}

WeylElement rho(const RationalMatrix& a) {
  if (!a.square()) throw std::invalid_argument("rho: matrix not square");
  const std::size_t m = a.rows();
  WeylElement out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      Monomial mono(m);
      mono.z(j) = 1;
      mono.d(i) = 1;
      out.add_term(mono, -a(i, j));
    }
  return out;
}

std::vector<WeylElement> twisted_generators(const LieSubalgebra& h, const Character& chi) {
  if (chi.values.size() != h.basis.size()) throw std::invalid_argument("character/basis size mismatch");
  std::vector<WeylElement> out;
  for (std::size_t k = 0; k < h.basis.size(); ++k) {
    const std::size_t m = h.basis[k].rows();
    out.push_back(rho(h.basis[k]) - WeylElement(m, chi.values[k]));
  }
  return out;
}

std::vector<DiagramCheck> containment_diagram(const LieSubalgebra& h_small, const Character& chi_small,
                                              const LieSubalgebra& h_big, const Character& chi_big,
                                              const WeylIdeal& ideal_small, const WeylIdeal& ideal_big) {
  require_same_ambient(ideal_small.ambient(), ideal_big.ambient());
  require_same_ambient(h_small.matrix_size(), ideal_small.ambient());
  require_same_ambient(h_big.matrix_size(), ideal_big.ambient());
  std::vector<DiagramCheck> out;

  auto in_ideal = [](const std::string& name, const std::vector<WeylElement>& gens, const WeylIdeal& ideal) {
    DiagramCheck c{name, true, {}};
    if (auto w = containment_witness(ideal, gens)) {
      c.holds = false;
      c.witness = to_string(*w);
    }
    return c;
  };

  const auto small_gens = twisted_generators(h_small, chi_small);
  out.push_back(in_ideal("(rho-chi)(h_small) in I_small", small_gens, ideal_small));
  out.push_back(in_ideal("(rho-chi)(h_big) in I_big", twisted_generators(h_big, chi_big), ideal_big));

  DiagramCheck sub{"(rho-chi)(h_small) in (rho-chi)(h_big)", true, {}};
  for (std::size_t k = 0; k < h_small.basis.size() && sub.holds; ++k) {
    auto coords = span_coordinates(h_big.basis, h_small.basis[k]);
    if (!coords) {
      sub.holds = false;
      sub.witness = "basis element " + std::to_string(k + 1) + " of h_small outside h_big";
      break;
    }
    WeylElement image(ideal_big.ambient());
    for (std::size_t b = 0; b < coords->size(); ++b)
      image += (rho(h_big.basis[b]) - WeylElement(ideal_big.ambient(), chi_big.values[b])) * (*coords)[b];
    if (image != small_gens[k]) {
      sub.holds = false;
      sub.witness = to_string(small_gens[k]);
    }
  }
  out.push_back(sub);

  out.push_back(in_ideal("I_small in I_big", ideal_small.generators(), ideal_big));
  return out;
}

std::vector<Polynomial> vector_field(const RationalMatrix& a) {
  if (!a.square()) throw std::invalid_argument("vector_field: matrix not square");
  const std::size_t m = a.rows();
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial c(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      Monomial mono(m);
      mono.z(j) = 1;
      c.add_term(mono, a(i, j));
    }
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

Polynomial derivative_z(const Polynomial& f, std::size_t index) {
  if (index < 1 || index > f.ambient()) throw std::out_of_range("derivative index out of range");
  Polynomial out(f.ambient());
  for (const auto& [mono, c] : f.terms()) {
    Exponent e = mono.z(index - 1);
    if (e == 0) continue;
    Monomial r = mono;
    r.z(index - 1) = e - 1;
    out.add_term(r, c * e);
  }
  return out;
}

Polynomial apply_vector_field(const std::vector<Polynomial>& field, const Polynomial& f) {
  require_same_ambient(field.size(), f.ambient());
  Polynomial out(f.ambient());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i].is_zero()) continue;
    out += field[i] * derivative_z(f, i + 1);
  }
  return out;
}

bool ideal_stable(const LieSubalgebra& h, const OrbitChart& chart) {
  std::vector<Polynomial> eqs;
  for (const auto& e : chart.equations)
    if (!e.is_zero()) eqs.push_back(e);
  if (eqs.empty()) return true;
  require_same_ambient(h.matrix_size(), eqs.front().ambient());
  PolynomialIdeal ideal(eqs);
  for (const auto& a : h.basis) {
    auto field = vector_field(a);
    for (const auto& f : eqs)
      if (!ideal.contains(apply_vector_field(field, f))) return false;
  }
  return true;
}

std::size_t tangent_rank_at(const LieSubalgebra& h, const std::vector<Rational>& point) {
  const std::size_t m = point.size();
  RationalMatrix rows(h.basis.size(), m);
  for (std::size_t b = 0; b < h.basis.size(); ++b) {
    if (h.basis[b].rows() != m) throw std::invalid_argument("tangent_rank_at: dimension mismatch");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) rows(b, i) += h.basis[b](i, j) * point[j];
  }
  return rank(rows);
}

}  // namespace weyl
