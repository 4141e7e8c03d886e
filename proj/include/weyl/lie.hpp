#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/groebner.hpp"
#include "weyl/poly.hpp"

namespace weyl {

/// Dense exact rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);
  /// Matrix unit E_ij, 1-based.
  static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix a);
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b);

/// c a c^-1.
RationalMatrix conjugate(const RationalMatrix& a, const RationalMatrix& c);

/// Parses sums like "E11 + E22", "2*E14 - E32", "E(1,4)" into an n x n matrix.
RationalMatrix parse_matrix_expression(std::string_view text, std::size_t n);

/// Coordinates of `target` in the span of `basis`, if it lies there.
std::optional<std::vector<Rational>> span_coordinates(const std::vector<RationalMatrix>& basis,
                                                      const RationalMatrix& target);

struct LieSubalgebra {
  std::string name;
  std::vector<RationalMatrix> basis;

  std::size_t dimension() const { return basis.size(); }
  std::size_t matrix_size() const { return basis.empty() ? 0 : basis.front().rows(); }
};

/// Conjugates every basis element by c.
LieSubalgebra realize(const LieSubalgebra& h, const RationalMatrix& c, std::string name = {});

bool linearly_independent(const std::vector<RationalMatrix>& basis);

/// Every pairwise bracket lies in the span of the basis.
bool is_subalgebra(const std::vector<RationalMatrix>& basis);

/// Linear functional given by its values on a basis.
struct Character {
  std::string name;
  std::vector<Rational> values;
};

/// chi(X) for X in span(h); throws if X is outside.
Rational evaluate(const Character& chi, const LieSubalgebra& h, const RationalMatrix& x);

/// chi([X, Y]) = 0 on all basis pairs.
bool vanishes_on_brackets(const Character& chi, const LieSubalgebra& h);

/// rho(E_ij) = -z_j d_i, extended linearly.
WeylElement rho(const RationalMatrix& a);

/// {rho(X) - chi(X) : X in the basis of h}.
std::vector<WeylElement> twisted_generators(const LieSubalgebra& h, const Character& chi);

struct DiagramCheck {
  std::string name;
  bool holds = false;
  std::string witness;
};

/// The four inclusions
///   (rho - chi_s)(h_s) in I_s,  (rho - chi_b)(h_b) in I_b,
///   (rho - chi_s)(h_s) in (rho - chi_b)(h_b),  I_s in I_b.
std::vector<DiagramCheck> containment_diagram(const LieSubalgebra& h_small, const Character& chi_small,
                                              const LieSubalgebra& h_big, const Character& chi_big,
                                              const WeylIdeal& ideal_small, const WeylIdeal& ideal_big);

/// Coefficients of v_A = sum_i (A z)_i d/dz_i, as polynomials in z.
std::vector<Polynomial> vector_field(const RationalMatrix& a);

/// Partial derivative with respect to z_index (1-based) in the symbol ring.
Polynomial derivative_z(const Polynomial& f, std::size_t index);

Polynomial apply_vector_field(const std::vector<Polynomial>& field, const Polynomial& f);

struct OrbitChart {
  std::string name;
  std::vector<Polynomial> equations;
  std::vector<Polynomial> inequations;
  int expected_dimension = -1;
};

/// v_A(f) lies in the ideal of the chart equations for every basis A and
/// every equation f.
bool ideal_stable(const LieSubalgebra& h, const OrbitChart& chart);

/// rank of {A p : A in basis}, the infinitesimal orbit dimension at p.
std::size_t tangent_rank_at(const LieSubalgebra& h, const std::vector<Rational>& point);

}  // namespace weyl
