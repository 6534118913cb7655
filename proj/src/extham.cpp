#include "ehf/extham.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ehf/errors.hpp"

namespace ehf::extham {

namespace {

double rel_err(Complex value, double target) {
  return std::abs(value - target) / std::max(std::abs(target), kRelativeErrorFloor);
}

}  // namespace

void SystemSample::validate() const {
  const std::size_t n = particles.size();
  if (n == 0) throw DomainError("system sample needs at least one particle");
  if (momenta.size() != n || potentials.size() != n) {
    throw DomainError("system sample: momenta/potentials must have one entry per particle");
  }
  for (const auto& p : particles) {
    if (!(p.mass > 0.0)) throw DomainError("particle mass must be positive");
  }
  if (!(light_speed > 0.0)) throw DomainError("light speed must be positive");
}

void Sample1D::validate() const {
  if (!(mass > 0.0)) throw DomainError("particle mass must be positive");
}

Factorization1D Factorization1D::hermitian(double mass) {
  if (!(mass > 0.0)) throw DomainError("particle mass must be positive");
  const double f = 1.0 / std::sqrt(2.0 * mass);
  return {f, f};
}

Factorization1D Factorization1D::general(double mass, double upper, double lower) {
  if (!(mass > 0.0)) throw DomainError("particle mass must be positive");
  const double target = 1.0 / (2.0 * mass);
  if (std::abs(upper * lower - target) > 1e-14 * target) {
    throw DomainError("1-D factorization needs upper * lower = 1/2m");
  }
  return {upper, lower};
}

double minus_k(const Sample1D& s) {
  s.validate();
  return s.energy - s.potential - s.momentum * s.momentum / (2.0 * s.mass);
}

ComplexMatrix build_g_1d(const Sample1D& s) { return build_g_1d(s, Factorization1D::hermitian(s.mass)); }

ComplexMatrix build_g_1d(const Sample1D& s, Factorization1D f) {
  s.validate();
  return {{s.energy - s.potential, f.upper * s.momentum}, {f.lower * s.momentum, 1.0}};
}

ComplexVector null_spinor_1d(const Sample1D& s, Complex lambda, double tol) {
  const double k = minus_k(s);
  if (std::abs(k) > tol) throw OffShellError(std::abs(k), tol);
  return {lambda, -(s.momentum / std::sqrt(2.0 * s.mass)) * lambda};
}

double minus_k(const SystemSample& s) {
  s.validate();
  double kinetic = 0.0;
  for (std::size_t j = 1; j <= s.particle_count(); ++j) kinetic += spin::norm_squared(kinetic_vector(j, s));
  return s.energy - s.scalar_potential - kinetic;
}

RealVector3 kinetic_vector(std::size_t particle, const SystemSample& s) {
  if (particle == 0 || particle > s.particle_count()) {
    throw DomainError("particle index " + std::to_string(particle) + " out of range 1.." +
                      std::to_string(s.particle_count()));
  }
  const auto& spec = s.particles[particle - 1];
  const RealVector3 pi = s.momenta[particle - 1] - (spec.charge / s.light_speed) * s.potentials[particle - 1];
  return (1.0 / std::sqrt(2.0 * spec.mass)) * pi;
}

ComplexMatrix h_block(std::size_t particle, const SystemSample& s) {
  s.validate();
  return spin::sigma_dot(kinetic_vector(particle, s), spin::SpinSite(particle, s.particle_count()));
}

ComplexMatrix build_g_n(const SystemSample& s, std::size_t max_particles) {
  s.validate();
  const std::size_t n = s.particle_count();
  if (n > max_particles) {
    throw DimensionError("build_g_n: " + std::to_string(n) + " particles exceeds the configured maximum " +
                         std::to_string(max_particles));
  }
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix g(d * (n + 1), d * (n + 1));
  const double a = s.energy - s.scalar_potential;
  for (std::size_t i = 0; i < d; ++i) g(i, i) = a;
  for (std::size_t j = 1; j <= n; ++j) {
    const ComplexMatrix h = h_block(j, s);
    g.set_block(0, j * d, h);
    g.set_block(j * d, 0, h);
    for (std::size_t i = 0; i < d; ++i) g(j * d + i, j * d + i) = 1.0;
  }
  return g;
}

DetIdentityReport verify_det_identity(const SystemSample& s) {
  const ComplexMatrix g = build_g_n(s);
  const std::size_t d = std::size_t{1} << s.particle_count();
  DetIdentityReport r;
  r.det_direct = linalg::det_lu(g);
  r.det_schur = linalg::block_det_schur(g, linalg::BlockPartition{d});
  r.minus_k = minus_k(s);
  r.exponent = determinant_exponent(s.particle_count());
  r.k_power = std::pow(r.minus_k, static_cast<double>(r.exponent));
  r.k_squared = r.minus_k * r.minus_k;
  r.max_rel_err = std::max({rel_err(r.det_direct, r.k_power), rel_err(r.det_schur, r.k_power),
                            rel_err(r.det_direct - r.det_schur + r.k_power, r.k_power)});
  r.rel_err_vs_k_squared = rel_err(r.det_direct, r.k_squared);
  return r;
}

DetIdentityReport verify_det_identity(const Sample1D& s) {
  const ComplexMatrix g = build_g_1d(s);
  DetIdentityReport r;
  r.det_direct = linalg::det_lu(g);
  r.det_schur = linalg::block_det_schur(g, linalg::BlockPartition{1});
  r.minus_k = minus_k(s);
  r.exponent = 1;
  r.k_power = r.minus_k;
  r.k_squared = r.minus_k * r.minus_k;
  r.max_rel_err = std::max({rel_err(r.det_direct, r.k_power), rel_err(r.det_schur, r.k_power),
                            rel_err(r.det_direct - r.det_schur + r.k_power, r.k_power)});
  r.rel_err_vs_k_squared = rel_err(r.det_direct, r.k_squared);
  return r;
}

std::vector<ComplexVector> null_spinors_n(const SystemSample& s, double tol) {
  const double k = minus_k(s);
  if (std::abs(k) > tol) throw OffShellError(std::abs(k), tol);
  const std::size_t n = s.particle_count();
  const std::size_t d = std::size_t{1} << n;
  std::vector<ComplexMatrix> blocks;
  for (std::size_t j = 1; j <= n; ++j) blocks.push_back(h_block(j, s));

  std::vector<ComplexVector> basis;
  for (std::size_t e = 0; e < d; ++e) {
    ComplexVector theta(d * (n + 1));
    theta[e] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      // theta_{j+1} = -H_j theta_1; theta_1 = e-th unit vector picks column e.
      for (std::size_t i = 0; i < d; ++i) theta[(j + 1) * d + i] = -blocks[j](i, e);
    }
    basis.push_back(std::move(theta));
  }
  return basis;
}

SystemSample put_on_shell(SystemSample s) {
  s.energy = 0.0;
  const double k0 = minus_k(s);  // = -U - kinetic
  s.energy = -k0;
  return s;
}

}  // namespace ehf::extham
