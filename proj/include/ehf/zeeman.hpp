#pragma once

// Two-particle weak-field Zeeman analysis: centre-of-mass reduction, the
// modified Larmor frequency and the resulting level splitting.
//
// Particle 1 carries charge -e, particle 2 carries +e; B points along z.

#include <cstddef>
#include <vector>

#include "ehf/polynomial.hpp"
#include "ehf/quantize.hpp"
#include "ehf/units.hpp"

namespace ehf::zeeman {

struct ZeemanSystem {
  double m1 = 1.0;
  double m2 = 1836.15267;
  double z = 1.0;  // nuclear charge number
  double b = 0.0;  // field strength along z
  Units units{};

  /// Throws DomainError for nonpositive masses or a non-finite field.
  void validate() const;
};

struct MassDecomposition {
  double total = 0.0;
  double reduced = 0.0;
  double mu1 = 0.0;  // m1 / M
  double mu2 = 0.0;  // m2 / M
  double larmor_mass = 0.0;  // meaningless when larmor_infinite
  bool larmor_infinite = false;
};

MassDecomposition decompose_masses(const ZeemanSystem& s);
MassDecomposition decompose_masses(double m1, double m2);

/// omega_L = (e B / 2c) (1/m1 - 1/m2); exactly 0 for equal masses.
double larmor_frequency(const ZeemanSystem& s);
/// 1/m1 - 1/m2.
double lamb_g_factor(const ZeemanSystem& s);

/// Checks p1 = p_r + mu1 P_R and p2 = -p_r + mu2 P_R on a test polynomial f in
/// (x1, y1, z1, x2, y2, z2) by substituting r1 = R + mu2 r, r2 = R - mu1 r.
/// Variables after substitution are (r_x, r_y, r_z, R_x, R_y, R_z).
/// Returns the max coefficient error over both particles and all three axes.
double com_transform_residual(double m1, double m2, const poly::Polynomial& f, const Units& units = {});

struct VectorPotentialSplit {
  /// Linear coefficients of A_R(R) and A_r(r): a[i][j] multiplies v_j in component i.
  quantize::FieldConfig::Gauge a_center{};
  quantize::FieldConfig::Gauge a_relative{};
  /// max error of A1 = A_R + mu2 A_r and A2 = A_R - mu1 A_r, and of A_R, A_r
  /// against the symmetric-gauge form (B/2)(-v_y, v_x, 0).
  double residual = 0.0;
};

/// Derives A_R = A1|_{r=0} and A_r = (A1 - A2)|_{R=0} by substitution and checks the split.
VectorPotentialSplit vector_potential_split(double m1, double m2, double b);
double vector_potential_split_residual(double m1, double m2, double b);

/// -mu Z^2 e^4 / (2 hbar^2 n^2). Throws DomainError for n < 1.
double bohr_energy(int n, double mu, double z, const Units& units = {});

inline constexpr std::size_t kMinRadialGrid = 50;

/// Lowest `count` eigenvalues of -(hbar^2/2mu) u'' - Z e^2/r u + hbar^2 l(l+1)/(2 mu r^2) u
/// with u = 0 at both ends of the grid (grid x_min should be 0).
/// Throws DomainError when grid.size() < 50.
std::vector<double> radial_eigenvalues(int l, double mu, double z, const quantize::Grid1D& grid, std::size_t count,
                                       const Units& units = {});

struct LevelLabel {
  int n = 1;
  int l = 0;
  int m = 0;
  int branch = 1;  // spin component: 1 -> m+1, 2 -> m-1

  /// Throws DomainError unless n >= 1, 0 <= l < n, |m| <= l, branch in {1, 2}.
  void validate() const;
};

/// hbar omega_L (m + 1) for branch 1, hbar omega_L (m - 1) for branch 2.
double zeeman_shift(const ZeemanSystem& s, const LevelLabel& label);
/// E_n (reduced-mass Bohr energy) plus the shift.
double zeeman_levels(const ZeemanSystem& s, const LevelLabel& label);

struct LevelRow {
  LevelLabel label;
  double energy = 0.0;
  double shift = 0.0;
};

/// Every (n, l, m, branch) with n <= n_max, ordered by n, l, m, branch.
std::vector<LevelRow> splitting_table(const ZeemanSystem& s, int n_max);

}  // namespace ehf::zeeman
