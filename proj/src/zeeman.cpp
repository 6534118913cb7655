#include "ehf/zeeman.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ehf/errors.hpp"
#include "ehf/linalg.hpp"

namespace ehf::zeeman {

using namespace std::complex_literals;

using linalg::Complex;
using poly::Polynomial;

void ZeemanSystem::validate() const {
  if (!(m1 > 0.0) || !(m2 > 0.0)) throw DomainError("Zeeman system masses must be positive");
  if (!std::isfinite(b)) throw DomainError("field strength must be finite");
  if (!std::isfinite(z)) throw DomainError("charge number must be finite");
}

MassDecomposition decompose_masses(double m1, double m2) {
  if (!(m1 > 0.0) || !(m2 > 0.0)) throw DomainError("masses must be positive");
  MassDecomposition d;
  d.total = m1 + m2;
  d.reduced = m1 * m2 / d.total;
  d.mu1 = m1 / d.total;
  d.mu2 = m2 / d.total;
  if (m1 == m2) {
    d.larmor_infinite = true;
    d.larmor_mass = 0.0;
  } else {
    d.larmor_mass = m1 * m2 / (m2 - m1);
  }
  return d;
}

MassDecomposition decompose_masses(const ZeemanSystem& s) {
  s.validate();
  return decompose_masses(s.m1, s.m2);
}

double lamb_g_factor(const ZeemanSystem& s) {
  s.validate();
  if (s.m1 == s.m2) return 0.0;
  return 1.0 / s.m1 - 1.0 / s.m2;
}

double larmor_frequency(const ZeemanSystem& s) {
  const double g = lamb_g_factor(s);
  if (g == 0.0) return 0.0;
  return s.units.elementary_charge * s.b / (2.0 * s.units.light_speed) * g;
}

namespace {

constexpr std::size_t kCoords = 6;

Polynomial var(std::size_t i, int cap) { return Polynomial::variable(kCoords, i, cap); }

// r1 = R + mu2 r, r2 = R - mu1 r in the (r, R) variable order.
std::array<Polynomial, kCoords> com_substitution(double mu1, double mu2, int cap) {
  std::array<Polynomial, kCoords> sub;
  for (std::size_t a = 0; a < 3; ++a) {
    sub[a] = var(3 + a, cap) + Complex(mu2) * var(a, cap);
    sub[3 + a] = var(3 + a, cap) - Complex(mu1) * var(a, cap);
  }
  return sub;
}

}  // namespace

double com_transform_residual(double m1, double m2, const Polynomial& f, const Units& units) {
  if (f.variables() != kCoords) throw DimensionError("COM test function must use 6 coordinates");
  const auto d = decompose_masses(m1, m2);
  const int cap = f.max_degree();
  const auto sub = com_substitution(d.mu1, d.mu2, cap);
  const Polynomial g = f.substitute(sub);
  const Complex p = -1i * units.hbar;  // (hbar/i)

  double worst = 0.0;
  for (std::size_t a = 0; a < 3; ++a) {
    const Polynomial dr = g.derivative(a);
    const Polynomial dR = g.derivative(3 + a);
    // Particle 1: (hbar/i) d f/d x1_a, rewritten in (r, R).
    const Polynomial lhs1 = p * f.derivative(a).substitute(sub);
    const Polynomial rhs1 = p * (dr + Complex(d.mu1) * dR);
    const Polynomial lhs2 = p * f.derivative(3 + a).substitute(sub);
    const Polynomial rhs2 = p * (Complex(d.mu2) * dR - dr);
    worst = std::max({worst, poly::max_coefficient_diff(lhs1, rhs1), poly::max_coefficient_diff(lhs2, rhs2)});
  }
  return worst;
}

namespace {

// Component i of (B/2)(-v_y, v_x, 0) as a linear polynomial in the coordinates starting at `offset`.
Polynomial symmetric_component(std::size_t i, double b, std::size_t offset) {
  std::vector<double> c(kCoords, 0.0);
  if (i == 0) c[offset + 1] = -0.5 * b;
  if (i == 1) c[offset + 0] = 0.5 * b;
  return Polynomial::linear(kCoords, c, 1);
}

}  // namespace

VectorPotentialSplit vector_potential_split(double m1, double m2, double b) {
  if (!std::isfinite(b)) throw DomainError("field strength must be finite");
  const auto d = decompose_masses(m1, m2);
  const auto sub = com_substitution(d.mu1, d.mu2, 1);

  // Projections onto r = 0 and R = 0.
  std::array<Polynomial, kCoords> only_r, only_R;
  const Polynomial zero(kCoords, 1);
  for (std::size_t a = 0; a < 3; ++a) {
    only_r[a] = var(a, 1);
    only_r[3 + a] = zero;
    only_R[a] = zero;
    only_R[3 + a] = var(3 + a, 1);
  }

  VectorPotentialSplit out;
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    // A_k(r_k) in original coordinates, then expressed in (r, R).
    const Polynomial a1 = symmetric_component(i, b, 0).substitute(sub);
    const Polynomial a2 = symmetric_component(i, b, 3).substitute(sub);
    const Polynomial a_center = a1.substitute(only_R);
    const Polynomial a_rel = (a1 - a2).substitute(only_r);

    for (std::size_t j = 0; j < 3; ++j) {
      poly::Exponents er{}, eR{};
      er[j] = 1;
      eR[3 + j] = 1;
      out.a_relative[i][j] = a_rel.coefficient(er).real();
      out.a_center[i][j] = a_center.coefficient(eR).real();
    }

    worst = std::max({worst, poly::max_coefficient_diff(a1, a_center + Complex(d.mu2) * a_rel),
                      poly::max_coefficient_diff(a2, a_center - Complex(d.mu1) * a_rel),
                      poly::max_coefficient_diff(a_center, symmetric_component(i, b, 3)),
                      poly::max_coefficient_diff(a_rel, symmetric_component(i, b, 0))});
  }
  out.residual = worst;
  return out;
}

double vector_potential_split_residual(double m1, double m2, double b) {
  return vector_potential_split(m1, m2, b).residual;
}

double bohr_energy(int n, double mu, double z, const Units& units) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1, got " + std::to_string(n));
  if (!(mu > 0.0)) throw DomainError("reduced mass must be positive");
  const double e2 = units.elementary_charge * units.elementary_charge;
  return -mu * z * z * e2 * e2 / (2.0 * units.hbar * units.hbar * static_cast<double>(n) * static_cast<double>(n));
}

std::vector<double> radial_eigenvalues(int l, double mu, double z, const quantize::Grid1D& grid, std::size_t count,
                                       const Units& units) {
  if (l < 0) throw DomainError("angular momentum must be >= 0");
  if (!(mu > 0.0)) throw DomainError("reduced mass must be positive");
  if (grid.size() < kMinRadialGrid) {
    throw DomainError("radial grid too coarse: " + std::to_string(grid.size()) + " points, need at least " +
                      std::to_string(kMinRadialGrid));
  }
  if (grid.x_min() < 0.0) throw DomainError("radial grid must start at r >= 0");
  auto t = quantize::kinetic_tridiagonal(grid, mu, units.hbar);
  const double e2 = units.elementary_charge * units.elementary_charge;
  const double centrifugal = units.hbar * units.hbar * l * (l + 1) / (2.0 * mu);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.point(i);
    t.diagonal[i] += -z * e2 / r + centrifugal / (r * r);
  }
  return linalg::tridiagonal_eigenvalues(t, count);
}

void LevelLabel::validate() const {
  if (n < 1) throw DomainError("level label: n must be >= 1");
  if (l < 0 || l >= n) throw DomainError("level label: need 0 <= l < n");
  if (m < -l || m > l) throw DomainError("level label: need |m| <= l");
  if (branch != 1 && branch != 2) throw DomainError("level label: branch must be 1 or 2");
}

double zeeman_shift(const ZeemanSystem& s, const LevelLabel& label) {
  label.validate();
  const double w = larmor_frequency(s);
  const int k = label.branch == 1 ? label.m + 1 : label.m - 1;
  return s.units.hbar * w * static_cast<double>(k);
}

double zeeman_levels(const ZeemanSystem& s, const LevelLabel& label) {
  const double shift = zeeman_shift(s, label);
  return bohr_energy(label.n, decompose_masses(s).reduced, s.z, s.units) + shift;
}

std::vector<LevelRow> splitting_table(const ZeemanSystem& s, int n_max) {
  if (n_max < 1) throw DomainError("splitting table needs n_max >= 1");
  const double mu = decompose_masses(s).reduced;
  std::vector<LevelRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const double e = bohr_energy(n, mu, s.z, s.units);
    for (int l = 0; l < n; ++l)
      for (int m = -l; m <= l; ++m)
        for (int branch = 1; branch <= 2; ++branch) {
          LevelRow row{{n, l, m, branch}, 0.0, 0.0};
          row.shift = zeeman_shift(s, row.label);
          row.energy = e + row.shift;
          rows.push_back(row);
        }
  }
  return rows;
}

}  // namespace ehf::zeeman
