#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ehf/linalg.hpp"

namespace ehf::spin {

using linalg::Complex;
using linalg::ComplexMatrix;

inline constexpr std::size_t kDefaultMaxParticles = 4;

enum class SpinAxis { x = 1, y = 2, z = 3 };

inline constexpr SpinAxis kAxes[3] = {SpinAxis::x, SpinAxis::y, SpinAxis::z};

/// Particle j (1-based) out of n spin-1/2 particles.
class SpinSite {
 public:
  /// Throws DomainError unless 1 <= j <= n.
  SpinSite(std::size_t j, std::size_t n);
  std::size_t particle() const noexcept { return j_; }
  std::size_t count() const noexcept { return n_; }

 private:
  std::size_t j_;
  std::size_t n_;
};

struct RealVector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend RealVector3 operator+(RealVector3 a, RealVector3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend RealVector3 operator-(RealVector3 a, RealVector3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend RealVector3 operator*(double s, RealVector3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const RealVector3&, const RealVector3&) = default;
};

inline double dot(RealVector3 a, RealVector3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline RealVector3 cross(RealVector3 a, RealVector3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm_squared(RealVector3 a) { return dot(a, a); }

/// 2x2 Pauli matrix for the given axis.
ComplexMatrix pauli(SpinAxis axis);

/// I_{2^{j-1}} (x) sigma_axis (x) I_{2^{n-j}}.
/// Throws DimensionError when n exceeds max_particles.
ComplexMatrix embed_spin(SpinAxis axis, SpinSite site, std::size_t max_particles = kDefaultMaxParticles);

/// sum_a v_a * embed_spin(a, site).
ComplexMatrix sigma_dot(RealVector3 v, SpinSite site, std::size_t max_particles = kDefaultMaxParticles);

/// max|(sigma.alpha)(sigma.beta) - [(alpha.beta) I + i sigma.(alpha x beta)]| at one site.
double pauli_product_identity_residual(RealVector3 alpha, RealVector3 beta, SpinSite site);

/// One measured commutator [sigma_{a j}, sigma_{b k}].
struct CommutatorEntry {
  SpinAxis a;
  SpinAxis b;
  std::size_t j;
  std::size_t k;
  /// Coefficient c in [sigma_aj, sigma_bk] = c * sigma_{target, j}; zero when the commutator vanishes.
  Complex coefficient;
  /// Third axis completing (a, b); meaningful only when a != b.
  SpinAxis target;
  /// max|commutator - coefficient * sigma_{target j}|; 0 means the relation is exact.
  double residual;
  /// True when the commutator matrix is exactly zero.
  bool vanishes;
};

struct CommutatorReport {
  std::size_t particles;
  std::vector<CommutatorEntry> entries;
  /// Measured coefficient of [sigma_1j, sigma_2j] = c sigma_3j (2i for Pauli matrices).
  Complex same_site_constant;
  /// Coefficient obeyed by S = sigma/2: [S_1, S_2] = i S_3.
  Complex half_spin_constant{0.0, 1.0};
  /// True when same_site_constant equals i, i.e. the sigma matrices satisfy [s1,s2] = i s3.
  bool matches_unit_constant;
  /// All commutators between different sites are exactly zero.
  bool cross_site_exact_zero;
  /// Largest residual of the cyclic relation over all same-site pairs.
  double max_relation_residual;
};

/// Measures [sigma_aj, sigma_bk] for every axis pair and site pair (n <= 4).
CommutatorReport commutator_table(std::size_t n);

}  // namespace ehf::spin
