#pragma once

// Discrete and exact-polynomial realizations of the substitution p -> (hbar/i) d/dx.
//
// 1-D: the coupled pair
//   (E - V) psi_1 + D^dagger psi_2 = 0,
//   D psi_1 + psi_2 = 0
// is the pencil G(E) = [[E I - V, D^dagger], [D, I]]. D is the scaled forward
// difference from the n interior nodes onto the n+1 edges of a Dirichlet grid,
// so eliminating psi_2 = -D psi_1 yields H = D^dagger D + V with D^dagger D the
// standard 3-point kinetic operator -(hbar^2/2m) d^2/dx^2.
//
// N particles: polynomial spinors carry the operator identities
//   (sigma.(p - qA/c))^2 = (p - qA/c)^2 - (hbar q / c) sigma.B
// and the resulting Pauli Hamiltonian exactly.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ehf/extham.hpp"
#include "ehf/linalg.hpp"
#include "ehf/polynomial.hpp"
#include "ehf/spin.hpp"
#include "ehf/units.hpp"

namespace ehf::quantize {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using poly::Polynomial;
using poly::PolySpinor;
using spin::RealVector3;

// --- 1-D grid and pencil ----------------------------------------------------

/// n interior nodes x_i = x_min + (i+1) h, h = (x_max - x_min)/(n+1).
class Grid1D {
 public:
  /// Throws DomainError unless n >= 3 and x_max > x_min.
  Grid1D(double x_min, double x_max, std::size_t n);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return (x_max_ - x_min_) / static_cast<double>(n_ + 1); }
  double point(std::size_t i) const noexcept { return x_min_ + static_cast<double>(i + 1) * spacing(); }
  std::vector<double> points() const;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
};

enum class DifferenceScheme {
  /// (n+1) x n edge differences; D^dagger D is the 3-point Laplacian.
  forward,
  /// n x n central differences. D^dagger D couples only nodes of equal parity
  /// (even/odd decoupling), so its spectrum has spurious near-degenerate pairs.
  central,
};

/// D = (hbar/i) * difference / sqrt(2m).
ComplexMatrix momentum_matrix(const Grid1D& g, double mass, double hbar = 1.0,
                              DifferenceScheme scheme = DifferenceScheme::forward);

/// D^dagger D for the forward scheme: (hbar^2 / 2m h^2) tridiag(-1, 2, -1).
linalg::SymmetricTridiagonal kinetic_tridiagonal(const Grid1D& g, double mass, double hbar = 1.0);

class Pencil1D {
 public:
  Pencil1D(Grid1D grid, std::vector<double> potential, double mass, double hbar,
           DifferenceScheme scheme = DifferenceScheme::forward);

  const Grid1D& grid() const noexcept { return grid_; }
  std::span<const double> potential() const noexcept { return potential_; }
  double mass() const noexcept { return mass_; }
  double hbar() const noexcept { return hbar_; }
  DifferenceScheme scheme() const noexcept { return scheme_; }

  /// Rows of D (n+1 for the forward scheme, n for central).
  std::size_t edge_count() const noexcept;
  const ComplexMatrix& momentum() const;
  /// Dense G(E) = [[E I - V, D^dagger], [D, I]].
  ComplexMatrix g_matrix(double energy) const;
  /// G(E) * (psi_1, psi_2) without forming G; works for any grid size (forward scheme).
  ComplexVector apply(double energy, std::span<const Complex> stacked) const;

 private:
  Grid1D grid_;
  std::vector<double> potential_;
  double mass_;
  double hbar_;
  DifferenceScheme scheme_;
  mutable ComplexMatrix momentum_;
};

/// Throws DimensionError when v.size() != g.size().
Pencil1D coupled_pencil(const Grid1D& g, std::vector<double> v, double mass, double hbar = 1.0,
                        DifferenceScheme scheme = DifferenceScheme::forward);

/// H = D^dagger D + V, the Schur complement of the identity block (dense).
ComplexMatrix eliminate_pencil(const Pencil1D& p);

/// H as a real symmetric tridiagonal matrix (forward scheme only).
linalg::SymmetricTridiagonal eliminated_tridiagonal(const Pencil1D& p);

/// Lowest `count` eigenvalues of H.
std::vector<double> pencil_spectrum(const Pencil1D& p, std::size_t count);

/// det G(E) by dense LU.
Complex pencil_determinant(const Pencil1D& p, double energy);

/// psi_2 = -D psi_1.
ComplexVector reconstruct_psi2(const Pencil1D& p, std::span<const Complex> psi1);

/// Stacks (psi_1, psi_2) with psi_2 reconstructed.
ComplexVector stacked_solution(const Pencil1D& p, std::span<const Complex> psi1);

/// max |G(E)_ij| without assembling G.
double pencil_max_abs(const Pencil1D& p, double energy);

/// ||G(E) (psi_1, -D psi_1)|| / (max|G(E)| * ||(psi_1, psi_2)||), forward scheme.
double stacked_residual(const Pencil1D& p, double energy, std::span<const Complex> psi1);

struct PencilRootCheck {
  Complex det;
  /// 1e-8 * max|G(E)|^d with d the order of G(E), so the guard scales like the determinant.
  double guard = 0.0;
  /// |det G(E)| / prod_{j != k} |E - lambda_j|, i.e. the implied distance to the k-th root.
  double normalized = 0.0;
  bool within_guard = false;
};

inline constexpr double kPencilGuardFactor = 1e-8;

/// Substitutes spectrum[k] into the dense pencil determinant. `spectrum` must be
/// the full spectrum of H; intended for small grids.
PencilRootCheck pencil_root_check(const Pencil1D& p, std::span<const double> spectrum, std::size_t k);

// --- polynomial operator calculus ----------------------------------------

/// Uniform magnetic field with a linear gauge A_i(r) = sum_j gauge[i][j] r_j and curl A = B.
class FieldConfig {
 public:
  using Gauge = std::array<std::array<double, 3>, 3>;

  /// A = (B x r) / 2.
  static FieldConfig symmetric_gauge(RealVector3 b);
  /// Field taken as the curl of the given gauge.
  static FieldConfig from_gauge(const Gauge& gauge);
  /// Throws DomainError unless curl(gauge) reproduces b exactly.
  FieldConfig(RealVector3 b, const Gauge& gauge);

  RealVector3 field() const noexcept { return b_; }
  const Gauge& gauge() const noexcept { return gauge_; }
  /// A_axis evaluated on particle k's coordinates, as a polynomial in 3 * particles variables.
  Polynomial vector_potential(std::size_t axis, std::size_t particle, std::size_t particles,
                              int max_degree = poly::kDefaultMaxDegree) const;

  static RealVector3 curl(const Gauge& gauge);

 private:
  RealVector3 b_;
  Gauge gauge_;
};

/// (hbar/i) d/d(x_{particle, axis}) applied to every component.
PolySpinor poly_apply_momentum(const PolySpinor& ps, std::size_t particle, std::size_t axis, double hbar);

/// (p_axis - (q/c) A_axis) psi for particle `particle`.
PolySpinor apply_kinetic_momentum(const PolySpinor& ps, std::size_t particle, std::size_t axis,
                                  const FieldConfig& field, double charge, const Units& units);

/// sigma_particle . (p - (q/c) A) psi.
PolySpinor apply_sigma_kinetic(const PolySpinor& ps, std::size_t particle, const FieldConfig& field, double charge,
                               const Units& units);

/// Both sides of (sigma.pi)^2 psi = pi^2 psi - (hbar q / c) sigma.B psi for a
/// single particle (2-component spinor); returns the max coefficient error.
double pauli_kinetic_identity_residual(const FieldConfig& field, const extham::ParticleSpec& particle,
                                       const PolySpinor& ps, const Units& units);

struct PauliSystem {
  std::vector<extham::ParticleSpec> particles;
  std::vector<FieldConfig> fields;  // field seen by each particle
  Polynomial potential;             // U in 3N variables

  std::size_t particle_count() const noexcept { return particles.size(); }
  void validate() const;
};

/// sum_k (sigma_k.pi_k)^2 psi / 2m_k + U psi.
PolySpinor squared_block_form(const PauliSystem& s, const PolySpinor& ps, const Units& units);
/// sum_k pi_k^2 psi / 2m_k + U psi - sum_k (q_k hbar / 2 m_k c) sigma_k.B_k psi.
PolySpinor expanded_form(const PauliSystem& s, const PolySpinor& ps, const Units& units);
/// sum_k (q_k hbar / 2 m_k c) sigma_k.B_k as a 2^N x 2^N matrix.
ComplexMatrix spin_interaction_matrix(const PauliSystem& s, const Units& units);

/// max coefficient difference between the squared-block and expanded forms (N <= 3).
double pauli_hamiltonian_residual(const PauliSystem& s, const PolySpinor& ps, const Units& units);

}  // namespace ehf::quantize
