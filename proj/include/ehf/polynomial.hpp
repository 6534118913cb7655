#pragma once

// Multivariate polynomials with complex coefficients and spinors built from them.
// All arithmetic is exact apart from floating-point rounding of the coefficients,
// which is what lets operator identities be checked at the 1e-12 level.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ehf/linalg.hpp"

namespace ehf::poly {

using linalg::Complex;

/// Up to four particles with three coordinates each.
inline constexpr std::size_t kMaxVariables = 12;
inline constexpr int kDefaultMaxDegree = 6;

using Exponents = std::array<std::uint8_t, kMaxVariables>;

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Complex>;

  /// Zero polynomial in `variables` unknowns.
  explicit Polynomial(std::size_t variables = 0, int max_degree = kDefaultMaxDegree);

  static Polynomial constant(std::size_t variables, Complex value, int max_degree = kDefaultMaxDegree);
  static Polynomial variable(std::size_t variables, std::size_t index, int max_degree = kDefaultMaxDegree);
  /// sum_i coefficients[i] * x_i.
  static Polynomial linear(std::size_t variables, std::span<const double> coefficients,
                           int max_degree = kDefaultMaxDegree);
  static Polynomial monomial(std::size_t variables, const Exponents& exponents, Complex coefficient,
                             int max_degree = kDefaultMaxDegree);

  std::size_t variables() const noexcept { return variables_; }
  int max_degree() const noexcept { return max_degree_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  Complex coefficient(const Exponents& e) const;

  /// Adds c * x^e. Throws DegreeOverflowError when |e| exceeds max_degree.
  void add_term(const Exponents& e, Complex c);

  Polynomial derivative(std::size_t var) const;
  /// x_i -> replacements[i]; every replacement must share one variable count.
  Polynomial substitute(std::span<const Polynomial> replacements) const;
  Complex evaluate(std::span<const Complex> point) const;
  double max_abs_coefficient() const noexcept;

  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(Complex s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void require_compatible(const Polynomial& b, const char* what) const;

  std::size_t variables_;
  int max_degree_;
  TermMap terms_;
};

/// max over monomials of |a_e - b_e|.
double max_coefficient_diff(const Polynomial& a, const Polynomial& b);

int total_degree(const Exponents& e) noexcept;

/// Spinor whose components are polynomials over the same variables.
struct PolySpinor {
  std::vector<Polynomial> components;

  /// 2^particles zero components in 3 * particles variables.
  static PolySpinor zero(std::size_t particles, int max_degree = kDefaultMaxDegree);

  std::size_t size() const noexcept { return components.size(); }
  std::size_t variables() const noexcept { return components.empty() ? 0 : components.front().variables(); }
  int degree() const noexcept;

  PolySpinor& operator+=(const PolySpinor& b);
  PolySpinor& operator-=(const PolySpinor& b);
  PolySpinor& operator*=(Complex s);
  friend PolySpinor operator+(PolySpinor a, const PolySpinor& b) { return a += b; }
  friend PolySpinor operator-(PolySpinor a, const PolySpinor& b) { return a -= b; }
  friend PolySpinor operator*(Complex s, PolySpinor a) { return a *= s; }
};

/// result_i = sum_j m(i, j) * components_j.
PolySpinor apply_matrix(const linalg::ComplexMatrix& m, const PolySpinor& ps);
/// Multiplies every component by p.
PolySpinor multiply(const Polynomial& p, const PolySpinor& ps);
PolySpinor derivative(const PolySpinor& ps, std::size_t var);
double max_coefficient_diff(const PolySpinor& a, const PolySpinor& b);

/// Index of coordinate `axis` (0..2) of 1-based particle k.
inline std::size_t coordinate_index(std::size_t particle, std::size_t axis) { return 3 * (particle - 1) + axis; }

}  // namespace ehf::poly
