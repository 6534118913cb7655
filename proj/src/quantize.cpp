#include "ehf/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ehf/errors.hpp"

namespace ehf::quantize {

using namespace std::complex_literals;

// ---------------------------------------------------------------------------
// 1-D

Grid1D::Grid1D(double x_min, double x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n) {
  if (n < 3) throw DomainError("grid needs at least 3 interior points, got " + std::to_string(n));
  if (!(x_max > x_min)) throw DomainError("grid needs x_max > x_min");
}

std::vector<double> Grid1D::points() const {
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = point(i);
  return x;
}

ComplexMatrix momentum_matrix(const Grid1D& g, double mass, double hbar, DifferenceScheme scheme) {
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
  const std::size_t n = g.size();
  const double h = g.spacing();
  // (hbar/i) = -i hbar.
  const Complex scale = -1i * hbar / std::sqrt(2.0 * mass);
  if (scheme == DifferenceScheme::forward) {
    // Edge k sits between node k-1 and node k; nodes -1 and n are the walls.
    ComplexMatrix d(n + 1, n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k < n) d(k, k) = scale / h;
      if (k > 0) d(k, k - 1) = -scale / h;
    }
    return d;
  }
  ComplexMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n) d(i, i + 1) = scale / (2.0 * h);
    if (i > 0) d(i, i - 1) = -scale / (2.0 * h);
  }
  return d;
}

linalg::SymmetricTridiagonal kinetic_tridiagonal(const Grid1D& g, double mass, double hbar) {
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
  const std::size_t n = g.size();
  const double h = g.spacing();
  const double c = hbar * hbar / (2.0 * mass * h * h);
  return {std::vector<double>(n, 2.0 * c), std::vector<double>(n - 1, -c)};
}

Pencil1D::Pencil1D(Grid1D grid, std::vector<double> potential, double mass, double hbar, DifferenceScheme scheme)
    : grid_(grid), potential_(std::move(potential)), mass_(mass), hbar_(hbar), scheme_(scheme) {
  if (potential_.size() != grid_.size()) {
    throw DimensionError("pencil: potential has " + std::to_string(potential_.size()) + " samples for " +
                         std::to_string(grid_.size()) + " grid points");
  }
  if (!(mass > 0.0)) throw DomainError("mass must be positive");
}

std::size_t Pencil1D::edge_count() const noexcept {
  return scheme_ == DifferenceScheme::forward ? grid_.size() + 1 : grid_.size();
}

const ComplexMatrix& Pencil1D::momentum() const {
  if (momentum_.empty()) momentum_ = momentum_matrix(grid_, mass_, hbar_, scheme_);
  return momentum_;
}

ComplexMatrix Pencil1D::g_matrix(double energy) const {
  const std::size_t n = grid_.size();
  const std::size_t m = edge_count();
  const ComplexMatrix& d = momentum();
  ComplexMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = energy - potential_[i];
  g.set_block(0, n, d.adjoint());
  g.set_block(n, 0, d);
  for (std::size_t i = 0; i < m; ++i) g(n + i, n + i) = 1.0;
  return g;
}

ComplexVector Pencil1D::apply(double energy, std::span<const Complex> stacked) const {
  if (scheme_ != DifferenceScheme::forward) throw DomainError("sparse pencil apply needs the forward scheme");
  const std::size_t n = grid_.size();
  if (stacked.size() != 2 * n + 1) throw DimensionError("pencil apply: length mismatch");
  const Complex scale = -1i * hbar_ / (std::sqrt(2.0 * mass_) * grid_.spacing());
  const auto psi1 = stacked.subspan(0, n);
  const auto psi2 = stacked.subspan(n, n + 1);
  ComplexVector out(2 * n + 1);
  // Row block 1: (E - V) psi1 + D^dagger psi2, D^dagger(i, i) = conj(scale), D^dagger(i, i+1) = -conj(scale).
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (energy - potential_[i]) * psi1[i] + std::conj(scale) * (psi2[i] - psi2[i + 1]);
  }
  // Row block 2: D psi1 + psi2.
  for (std::size_t k = 0; k <= n; ++k) {
    Complex dpsi{};
    if (k < n) dpsi += scale * psi1[k];
    if (k > 0) dpsi -= scale * psi1[k - 1];
    out[n + k] = dpsi + psi2[k];
  }
  return out;
}

Pencil1D coupled_pencil(const Grid1D& g, std::vector<double> v, double mass, double hbar, DifferenceScheme scheme) {
  return Pencil1D(g, std::move(v), mass, hbar, scheme);
}

ComplexMatrix eliminate_pencil(const Pencil1D& p) {
  const std::size_t n = p.grid().size();
  ComplexMatrix h(n, n);
  if (p.scheme() == DifferenceScheme::forward) {
    const auto t = eliminated_tridiagonal(p);
    for (std::size_t i = 0; i < n; ++i) {
      h(i, i) = t.diagonal[i];
      if (i + 1 < n) {
        h(i, i + 1) = t.off_diagonal[i];
        h(i + 1, i) = t.off_diagonal[i];
      }
    }
    return h;
  }
  const ComplexMatrix& d = p.momentum();
  h = d.adjoint() * d;
  for (std::size_t i = 0; i < n; ++i) h(i, i) += p.potential()[i];
  return h;
}

linalg::SymmetricTridiagonal eliminated_tridiagonal(const Pencil1D& p) {
  if (p.scheme() != DifferenceScheme::forward) throw DomainError("tridiagonal form needs the forward scheme");
  auto t = kinetic_tridiagonal(p.grid(), p.mass(), p.hbar());
  for (std::size_t i = 0; i < t.size(); ++i) t.diagonal[i] += p.potential()[i];
  return t;
}

std::vector<double> pencil_spectrum(const Pencil1D& p, std::size_t count) {
  if (p.scheme() == DifferenceScheme::forward) return linalg::tridiagonal_eigenvalues(eliminated_tridiagonal(p), count);
  auto values = linalg::hermitian_eigen(eliminate_pencil(p)).values;
  values.resize(std::min(count, values.size()));
  return values;
}

Complex pencil_determinant(const Pencil1D& p, double energy) { return linalg::det_lu(p.g_matrix(energy)); }

ComplexVector reconstruct_psi2(const Pencil1D& p, std::span<const Complex> psi1) {
  const std::size_t n = p.grid().size();
  if (psi1.size() != n) throw DimensionError("reconstruct_psi2: psi1 length mismatch");
  if (p.scheme() == DifferenceScheme::forward) {
    const Complex scale = -1i * p.hbar() / (std::sqrt(2.0 * p.mass()) * p.grid().spacing());
    ComplexVector psi2(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Complex dpsi{};
      if (k < n) dpsi += scale * psi1[k];
      if (k > 0) dpsi -= scale * psi1[k - 1];
      psi2[k] = -dpsi;
    }
    return psi2;
  }
  ComplexVector psi2 = p.momentum() * psi1;
  for (auto& z : psi2) z = -z;
  return psi2;
}

ComplexVector stacked_solution(const Pencil1D& p, std::span<const Complex> psi1) {
  ComplexVector out(psi1.begin(), psi1.end());
  const auto psi2 = reconstruct_psi2(p, psi1);
  out.insert(out.end(), psi2.begin(), psi2.end());
  return out;
}

double pencil_max_abs(const Pencil1D& p, double energy) {
  double m = 1.0;
  for (const double v : p.potential()) m = std::max(m, std::abs(energy - v));
  if (p.scheme() == DifferenceScheme::forward) {
    return std::max(m, p.hbar() / (std::sqrt(2.0 * p.mass()) * p.grid().spacing()));
  }
  return std::max(m, p.momentum().max_abs());
}

double stacked_residual(const Pencil1D& p, double energy, std::span<const Complex> psi1) {
  const auto theta = stacked_solution(p, psi1);
  const auto r = p.apply(energy, theta);
  const double denom = pencil_max_abs(p, energy) * linalg::norm2(theta);
  return denom == 0.0 ? 0.0 : linalg::norm2(r) / denom;
}

PencilRootCheck pencil_root_check(const Pencil1D& p, std::span<const double> spectrum, std::size_t k) {
  if (k >= spectrum.size()) throw DimensionError("pencil_root_check: eigenvalue index out of range");
  if (spectrum.size() != p.grid().size()) throw DimensionError("pencil_root_check: need the full spectrum");
  const double e = spectrum[k];
  PencilRootCheck c;
  c.det = pencil_determinant(p, e);
  const auto order = static_cast<double>(p.grid().size() + p.edge_count());
  c.guard = kPencilGuardFactor * std::pow(pencil_max_abs(p, e), order);
  double others = 1.0;
  for (std::size_t j = 0; j < spectrum.size(); ++j)
    if (j != k) others *= std::abs(e - spectrum[j]);
  c.normalized = others == 0.0 ? std::abs(c.det) : std::abs(c.det) / others;
  c.within_guard = std::abs(c.det) <= c.guard;
  return c;
}

// ---------------------------------------------------------------------------
// Polynomial calculus

RealVector3 FieldConfig::curl(const Gauge& a) {
  // (curl A)_x = dA_z/dy - dA_y/dz, etc.
  return {a[2][1] - a[1][2], a[0][2] - a[2][0], a[1][0] - a[0][1]};
}

FieldConfig FieldConfig::symmetric_gauge(RealVector3 b) {
  Gauge g{};
  // A = (B x r)/2: A_x = (b_y z - b_z y)/2, A_y = (b_z x - b_x z)/2, A_z = (b_x y - b_y x)/2.
  g[0][1] = -0.5 * b.z;
  g[0][2] = 0.5 * b.y;
  g[1][0] = 0.5 * b.z;
  g[1][2] = -0.5 * b.x;
  g[2][0] = -0.5 * b.y;
  g[2][1] = 0.5 * b.x;
  return FieldConfig(b, g);
}

FieldConfig FieldConfig::from_gauge(const Gauge& gauge) { return FieldConfig(curl(gauge), gauge); }

FieldConfig::FieldConfig(RealVector3 b, const Gauge& gauge) : b_(b), gauge_(gauge) {
  if (!(curl(gauge) == b)) throw DomainError("vector potential gauge does not reproduce the stored field");
}

Polynomial FieldConfig::vector_potential(std::size_t axis, std::size_t particle, std::size_t particles,
                                         int max_degree) const {
  if (axis > 2) throw DomainError("axis must be 0, 1 or 2");
  if (particle == 0 || particle > particles) throw DomainError("particle index out of range");
  std::vector<double> coeffs(3 * particles, 0.0);
  for (std::size_t j = 0; j < 3; ++j) coeffs[poly::coordinate_index(particle, j)] = gauge_[axis][j];
  return Polynomial::linear(3 * particles, coeffs, max_degree);
}

namespace {

std::size_t particles_of(const PolySpinor& ps) {
  const std::size_t vars = ps.variables();
  if (vars % 3 != 0 || vars == 0) throw DimensionError("spinor variables must be 3 per particle");
  const std::size_t n = vars / 3;
  if (ps.size() != (std::size_t{1} << n)) throw DimensionError("spinor must have 2^N components");
  return n;
}

}  // namespace

PolySpinor poly_apply_momentum(const PolySpinor& ps, std::size_t particle, std::size_t axis, double hbar) {
  const std::size_t n = particles_of(ps);
  if (particle == 0 || particle > n || axis > 2) throw DomainError("momentum coordinate out of range");
  auto out = poly::derivative(ps, poly::coordinate_index(particle, axis));
  out *= -1i * hbar;
  return out;
}

PolySpinor apply_kinetic_momentum(const PolySpinor& ps, std::size_t particle, std::size_t axis,
                                  const FieldConfig& field, double charge, const Units& units) {
  const std::size_t n = particles_of(ps);
  const int cap = ps.components.front().max_degree();
  PolySpinor out = poly_apply_momentum(ps, particle, axis, units.hbar);
  const Polynomial a = field.vector_potential(axis, particle, n, cap);
  if (!a.is_zero() && charge != 0.0) out -= (charge / units.light_speed) * poly::multiply(a, ps);
  return out;
}

PolySpinor apply_sigma_kinetic(const PolySpinor& ps, std::size_t particle, const FieldConfig& field, double charge,
                               const Units& units) {
  const std::size_t n = particles_of(ps);
  const spin::SpinSite site(particle, n);
  PolySpinor out = PolySpinor::zero(n, ps.components.front().max_degree());
  for (std::size_t a = 0; a < 3; ++a) {
    const auto pi = apply_kinetic_momentum(ps, particle, a, field, charge, units);
    out += poly::apply_matrix(spin::embed_spin(spin::kAxes[a], site), pi);
  }
  return out;
}

namespace {

PolySpinor kinetic_square(const PolySpinor& ps, std::size_t particle, const FieldConfig& field, double charge,
                          const Units& units) {
  PolySpinor out = PolySpinor::zero(particles_of(ps), ps.components.front().max_degree());
  for (std::size_t a = 0; a < 3; ++a) {
    out += apply_kinetic_momentum(apply_kinetic_momentum(ps, particle, a, field, charge, units), particle, a, field,
                                  charge, units);
  }
  return out;
}

}  // namespace

double pauli_kinetic_identity_residual(const FieldConfig& field, const extham::ParticleSpec& particle,
                                       const PolySpinor& ps, const Units& units) {
  if (particles_of(ps) != 1) throw DimensionError("kinetic identity acts on a single-particle spinor");
  const double q = particle.charge;
  const PolySpinor lhs =
      apply_sigma_kinetic(apply_sigma_kinetic(ps, 1, field, q, units), 1, field, q, units);
  PolySpinor rhs = kinetic_square(ps, 1, field, q, units);
  rhs -= (units.hbar * q / units.light_speed) * poly::apply_matrix(spin::sigma_dot(field.field(), {1, 1}), ps);
  return poly::max_coefficient_diff(lhs, rhs);
}

void PauliSystem::validate() const {
  const std::size_t n = particles.size();
  if (n == 0) throw DomainError("Pauli system needs at least one particle");
  if (fields.size() != n) throw DomainError("Pauli system needs one field per particle");
  if (potential.variables() != 3 * n) throw DimensionError("potential must use 3 variables per particle");
  for (const auto& p : particles)
    if (!(p.mass > 0.0)) throw DomainError("particle mass must be positive");
}

PolySpinor squared_block_form(const PauliSystem& s, const PolySpinor& ps, const Units& units) {
  s.validate();
  const std::size_t n = s.particle_count();
  if (particles_of(ps) != n) throw DimensionError("spinor particle count differs from the system");
  PolySpinor out = poly::multiply(s.potential, ps);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& spec = s.particles[k - 1];
    const auto& f = s.fields[k - 1];
    const auto sq = apply_sigma_kinetic(apply_sigma_kinetic(ps, k, f, spec.charge, units), k, f, spec.charge, units);
    out += Complex(1.0 / (2.0 * spec.mass)) * sq;
  }
  return out;
}

ComplexMatrix spin_interaction_matrix(const PauliSystem& s, const Units& units) {
  s.validate();
  const std::size_t n = s.particle_count();
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim, dim);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& spec = s.particles[k - 1];
    const double coupling = spec.charge * units.hbar / (2.0 * spec.mass * units.light_speed);
    m += coupling * spin::sigma_dot(s.fields[k - 1].field(), spin::SpinSite(k, n));
  }
  return m;
}

PolySpinor expanded_form(const PauliSystem& s, const PolySpinor& ps, const Units& units) {
  s.validate();
  const std::size_t n = s.particle_count();
  if (particles_of(ps) != n) throw DimensionError("spinor particle count differs from the system");
  PolySpinor out = poly::multiply(s.potential, ps);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& spec = s.particles[k - 1];
    out += Complex(1.0 / (2.0 * spec.mass)) * kinetic_square(ps, k, s.fields[k - 1], spec.charge, units);
  }
  out -= poly::apply_matrix(spin_interaction_matrix(s, units), ps);
  return out;
}

double pauli_hamiltonian_residual(const PauliSystem& s, const PolySpinor& ps, const Units& units) {
  if (s.particle_count() > 3) throw DimensionError("Pauli Hamiltonian check supports at most 3 particles");
  return poly::max_coefficient_diff(squared_block_form(s, ps, units), expanded_form(s, ps, units));
}

}  // namespace ehf::quantize
