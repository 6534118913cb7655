#pragma once

// Extended-Hamiltonian values K and their linear matrix factorizations G.
//
// One-dimensional particle:   -K = E - V - p^2/2m,
//   G = [[E - V, p/sqrt(2m)], [p/sqrt(2m), 1]],   det G = -K.
//
// N charged particles with spin:  -K = E - U - sum_k (p_k - q_k A_k / c)^2 / 2m_k,
//   G = [[aI, H_1 ... H_N], [H_1, I, ...], ..., [H_N, ..., I]]  (size 2^N (N+1)),
//   H_j = sigma_j . (p_j - q_j A_j / c) / sqrt(2m_j),  a = E - U.
// Eliminating the trailing identity blocks gives det G = det((a - sum h_j^2) I_{2^N})
// = (-K)^(2^N), so the determinant exponent is l = 1 for the 1-D matrix and
// l = 2^N for the N-particle matrix. The two agree with K^2 only for N = 1.

#include <cstddef>
#include <vector>

#include "ehf/linalg.hpp"
#include "ehf/spin.hpp"

namespace ehf::extham {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using spin::RealVector3;

inline constexpr double kDefaultOnShellTolerance = 1e-9;

struct ParticleSpec {
  double mass = 1.0;    // > 0
  double charge = 0.0;  // signed, units of e
};

/// Phase-space point of an N-particle system.
struct SystemSample {
  std::vector<ParticleSpec> particles;
  std::vector<RealVector3> momenta;     // one per particle
  std::vector<RealVector3> potentials;  // vector potential A_k at particle k
  double scalar_potential = 0.0;        // U
  double energy = 0.0;                  // E
  double light_speed = 137.035999;      // c

  std::size_t particle_count() const noexcept { return particles.size(); }
  /// Throws DomainError on inconsistent lengths, nonpositive mass or c.
  void validate() const;
};

struct Sample1D {
  double mass = 1.0;
  double momentum = 0.0;
  double potential = 0.0;  // V(x, t) at the sample point
  double energy = 0.0;

  void validate() const;
};

/// Off-diagonal pair (upper, lower) of a 1-D factorization with upper * lower = 1/2m.
/// The Hermitian choice is upper = lower = 1/sqrt(2m).
struct Factorization1D {
  double upper;
  double lower;

  static Factorization1D hermitian(double mass);
  /// Throws DomainError unless upper * lower == 1/2m to 1e-14 relative.
  static Factorization1D general(double mass, double upper, double lower);
};

// --- one dimension --------------------------------------------------------

/// -K = E - V - p^2/2m.
double minus_k(const Sample1D& s);

/// [[E - V, upper p], [lower p, 1]]; Hermitian factorization unless given.
ComplexMatrix build_g_1d(const Sample1D& s);
ComplexMatrix build_g_1d(const Sample1D& s, Factorization1D f);

/// (lambda, -(p/sqrt(2m)) lambda). Throws OffShellError when |K| > tol.
ComplexVector null_spinor_1d(const Sample1D& s, Complex lambda, double tol = kDefaultOnShellTolerance);

// --- N particles ----------------------------------------------------------

/// -K = E - U - sum_k (p_k - q_k A_k / c)^2 / 2m_k.
double minus_k(const SystemSample& s);

/// Kinetic vector (p_j - q_j A_j / c) / sqrt(2 m_j); |.|^2 is h_j^2.
RealVector3 kinetic_vector(std::size_t particle, const SystemSample& s);

/// H_j for 1-based particle index j; 2^N x 2^N Hermitian.
ComplexMatrix h_block(std::size_t particle, const SystemSample& s);

/// Full factorization matrix, size 2^N (N+1). Throws DimensionError when N > max_particles.
ComplexMatrix build_g_n(const SystemSample& s, std::size_t max_particles = spin::kDefaultMaxParticles);

/// Exponent l with det G = (-K)^l for the construction above.
inline std::size_t determinant_exponent(std::size_t particle_count) { return std::size_t{1} << particle_count; }

struct DetIdentityReport {
  Complex det_direct;        // LU on the full matrix
  Complex det_schur;         // |D| |A - B D^-1 C| with D the trailing identity block
  double minus_k = 0.0;      // -K
  double k_power = 0.0;      // (-K)^l
  double k_squared = 0.0;    // K^2
  std::size_t exponent = 0;  // l
  /// Largest pairwise relative error among det_direct, det_schur, k_power,
  /// each relative to max(|k_power|, floor).
  double max_rel_err = 0.0;
  /// |det_direct - K^2| / max(K^2, floor); only small when l = 2.
  double rel_err_vs_k_squared = 0.0;
};

inline constexpr double kRelativeErrorFloor = 1e-6;

DetIdentityReport verify_det_identity(const SystemSample& s);
/// 1-D specialization: l = 1, both determinant paths use the 2x2 matrix.
DetIdentityReport verify_det_identity(const Sample1D& s);

/// Null spinors theta = (theta_1, -H_1 theta_1, ..., -H_N theta_1) for theta_1 running
/// over the 2^N standard basis vectors. Throws OffShellError when |K| > tol.
std::vector<ComplexVector> null_spinors_n(const SystemSample& s, double tol = kDefaultOnShellTolerance);

/// Sets E so that K = 0 exactly in floating point as far as possible.
SystemSample put_on_shell(SystemSample s);

}  // namespace ehf::extham
