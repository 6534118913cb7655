#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ehf/errors.hpp"
#include "ehf/quantize.hpp"
#include "ehf/random.hpp"

using namespace ehf;
using namespace ehf::quantize;
using linalg::Complex;
using linalg::ComplexMatrix;
using namespace std::complex_literals;

namespace {

// Eigenvalues of (hbar^2 / 2m h^2) tridiag(-1, 2, -1) on n points.
double box_fd_level(std::size_t k, std::size_t n, double h, double mass) {
  const double s = std::sin(static_cast<double>(k) * std::numbers::pi / (2.0 * static_cast<double>(n + 1)));
  return 4.0 * s * s / (2.0 * mass * h * h);
}

Pencil1D box(std::size_t n, double length = 1.0) {
  const Grid1D g(0.0, length, n);
  return coupled_pencil(g, std::vector<double>(n, 0.0), 1.0);
}

}  // namespace

TEST_CASE("grid validation and geometry") {
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(Grid1D(1.0, 1.0, 10), DomainError);
  const Grid1D g(0.0, 4.0, 3);
  CHECK(g.spacing() == 1.0);
  CHECK(g.point(0) == 1.0);
  CHECK(g.point(2) == 3.0);
}

TEST_CASE("D^dagger D is the 3-point Laplacian") {
  // n = 3, h = 1, m = 1/2: D^dagger D = tridiag(-1, 2, -1).
  const auto d = momentum_matrix(Grid1D(0.0, 4.0, 3), 0.5);
  CHECK(d.rows() == 4);
  CHECK(d.cols() == 3);
  const ComplexMatrix want{{2.0, -1.0, 0.0}, {-1.0, 2.0, -1.0}, {0.0, -1.0, 2.0}};
  CHECK(linalg::max_abs_diff(d.adjoint() * d, want) < 1e-15);
  const auto t = kinetic_tridiagonal(Grid1D(0.0, 4.0, 3), 0.5);
  CHECK(linalg::max_abs_diff(t.to_dense(), want) < 1e-15);
}

TEST_CASE("forward difference annihilates constants away from the walls") {
  const auto d = momentum_matrix(Grid1D(0.0, 1.0, 8), 1.0);
  const std::vector<Complex> ones(8, 1.0);
  const auto r = d * ones;
  for (std::size_t k = 1; k < 8; ++k) CHECK(std::abs(r[k]) == 0.0);
  CHECK(std::abs(r[0]) > 0.0);
  CHECK(std::abs(r[8]) > 0.0);
}

TEST_CASE("kinetic operator is positive semidefinite") {
  const auto d = momentum_matrix(Grid1D(-1.0, 2.0, 15), 0.7, 1.3);
  const auto e = linalg::hermitian_eigen(d.adjoint() * d);
  CHECK(e.values.front() >= -1e-12);
}

TEST_CASE("pencil is Hermitian and its Schur complement is E - H") {
  auto g = rng::stream(51, "quantize");
  const Grid1D grid(-2.0, 2.0, 9);
  std::vector<double> v;
  for (int i = 0; i < 9; ++i) v.push_back(rng::uniform(g, -1.0, 1.0));
  const auto p = coupled_pencil(grid, v, 1.4);
  const double e = 0.37;
  const auto gm = p.g_matrix(e);
  CHECK(gm.rows() == 19);
  CHECK(linalg::is_hermitian(gm));
  // det G(E) = det(I) det(E - H)
  ComplexMatrix eh = e * ComplexMatrix::identity(9) - eliminate_pencil(p);
  CHECK(std::abs(pencil_determinant(p, e) - linalg::det_lu(eh)) < 1e-10 * std::abs(linalg::det_lu(eh)));
  CHECK_THROWS_AS(coupled_pencil(grid, std::vector<double>(8), 1.0), DimensionError);
}

TEST_CASE("sparse pencil apply equals dense multiplication") {
  auto g = rng::stream(52, "quantize");
  const Grid1D grid(0.0, 3.0, 11);
  std::vector<double> v;
  for (int i = 0; i < 11; ++i) v.push_back(rng::uniform(g, -2.0, 2.0));
  const auto p = coupled_pencil(grid, v, 0.9, 1.1);
  std::vector<Complex> x;
  for (int i = 0; i < 23; ++i) x.push_back(rng::complex(g));
  const auto dense = p.g_matrix(1.7) * x;
  const auto sparse = p.apply(1.7, x);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(dense[i] - sparse[i]) < 1e-12);
}

TEST_CASE("small-grid box spectrum matches the discrete sine formula") {
  const auto p = box(20);
  const double h = p.grid().spacing();
  const auto e = pencil_spectrum(p, 20);
  for (std::size_t k = 1; k <= 20; ++k) CHECK(std::abs(e[k - 1] - box_fd_level(k, 20, h, 1.0)) < 1e-10 * e[k - 1]);
  const auto dense = linalg::hermitian_eigen(eliminate_pencil(p)).values;
  for (std::size_t k = 0; k < 20; ++k) CHECK(std::abs(e[k] - dense[k]) < 1e-10 * e[k]);
}

TEST_CASE("each eigenvalue of H is a root of det G(E)") {
  auto g = rng::stream(53, "quantize");
  const Grid1D grid(-1.0, 1.0, 24);
  std::vector<double> v;
  for (int i = 0; i < 24; ++i) v.push_back(rng::uniform(g, 0.0, 5.0));
  const auto p = coupled_pencil(grid, v, 1.0);
  const auto spectrum = pencil_spectrum(p, 24);
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const auto c = pencil_root_check(p, spectrum, k);
    CHECK(c.within_guard);
    CHECK(c.normalized <= 1e-8 * std::max(1.0, std::abs(spectrum[k])));
  }
  // Halfway between two levels the determinant is far from zero.
  const double mid = 0.5 * (spectrum[0] + spectrum[1]);
  CHECK(std::abs(pencil_determinant(p, mid)) > 1e6 * std::abs(pencil_root_check(p, spectrum, 0).det));
}

TEST_CASE("box ground state converges to pi^2/2 at second order") {
  const double exact = std::numbers::pi * std::numbers::pi / 2.0;
  const auto e2000 = pencil_spectrum(box(2000), 1)[0];
  CHECK(std::abs(e2000 - exact) / exact <= 1e-5);
  const double err1 = std::abs(pencil_spectrum(box(99), 1)[0] - exact);
  const double err2 = std::abs(pencil_spectrum(box(199), 1)[0] - exact);
  const double ratio = err1 / err2;
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
}

TEST_CASE("harmonic oscillator levels") {
  const std::size_t n = 2000;
  const Grid1D grid(-10.0, 10.0, n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 0.5 * grid.point(i) * grid.point(i);
  const auto e = pencil_spectrum(coupled_pencil(grid, v, 1.0), 3);
  CHECK(std::abs(e[0] - 0.5) <= 1e-4);
  CHECK(std::abs(e[1] - e[0] - 1.0) <= 1e-3);
  CHECK(std::abs(e[2] - e[1] - 1.0) <= 1e-3);
}

TEST_CASE("psi_2 reconstruction and stacked residual") {
  const auto p = box(500);
  const std::vector<Complex> zero(500, 0.0);
  for (const auto z : reconstruct_psi2(p, zero)) CHECK(z == Complex(0.0));

  const auto t = eliminated_tridiagonal(p);
  const double e0 = linalg::tridiagonal_eigenvalues(t, 1)[0];
  const auto v = linalg::tridiagonal_eigenvector(t, e0);
  const std::vector<Complex> psi1(v.begin(), v.end());
  CHECK(stacked_residual(p, e0, psi1) <= 1e-8);
  CHECK(reconstruct_psi2(p, psi1).size() == 501);
  // Linearity.
  std::vector<Complex> twice(psi1);
  for (auto& z : twice) z *= Complex(2.0, -1.0);
  const auto a = reconstruct_psi2(p, psi1);
  const auto b = reconstruct_psi2(p, twice);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(b[i] - Complex(2.0, -1.0) * a[i]) < 1e-12);
  CHECK_THROWS_AS(reconstruct_psi2(p, std::vector<Complex>(499)), DimensionError);
}

TEST_CASE("central differences decouple even and odd nodes") {
  const Grid1D grid(0.0, 1.0, 12);
  const auto d = momentum_matrix(grid, 1.0, 1.0, DifferenceScheme::central);
  const auto k = d.adjoint() * d;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      if ((i + j) % 2 == 1) CHECK(k(i, j) == Complex(0.0));
  const auto p = coupled_pencil(grid, std::vector<double>(12, 0.0), 1.0, 1.0, DifferenceScheme::central);
  CHECK(p.edge_count() == 12);
  CHECK_THROWS_AS(eliminated_tridiagonal(p), DomainError);
  CHECK(pencil_spectrum(p, 3).size() == 3);
}

// --- polynomial operator calculus

namespace {

Units plain_units() { return Units{}; }

poly::Exponents ex(std::initializer_list<int> powers) {
  poly::Exponents e{};
  std::size_t i = 0;
  for (const int p : powers) e[i++] = static_cast<std::uint8_t>(p);
  return e;
}

}  // namespace

TEST_CASE("momentum operator on polynomials") {
  auto ps = poly::PolySpinor::zero(1);
  ps.components[0] = poly::Polynomial::constant(3, 2.0);
  CHECK(poly_apply_momentum(ps, 1, 0, 1.0).components[0].is_zero());

  // p_x x^2 = (hbar/i) 2x
  ps.components[0] = poly::Polynomial::monomial(3, ex({2}), 1.0);
  const auto r = poly_apply_momentum(ps, 1, 0, 1.5);
  CHECK(r.components[0].coefficient(ex({1})) == Complex(0.0, -3.0));
}

TEST_CASE("canonical commutator [p_x, x] f = (hbar/i) f") {
  auto g = rng::stream(54, "quantize-poly");
  const double hbar = 0.8;
  for (int t = 0; t < 20; ++t) {
    const auto ps = rng::poly_spinor(g, 1, 3, 5);
    const auto x = poly::Polynomial::variable(3, 0);
    const auto lhs = poly_apply_momentum(poly::multiply(x, ps), 1, 0, hbar) - poly::multiply(x, poly_apply_momentum(ps, 1, 0, hbar));
    auto rhs = ps;
    rhs *= Complex(0.0, -hbar);
    CHECK(poly::max_coefficient_diff(lhs, rhs) < 1e-14);
  }
}

TEST_CASE("field configurations carry a consistent curl") {
  const spin::RealVector3 b{0.2, -1.0, 3.0};
  const auto f = FieldConfig::symmetric_gauge(b);
  CHECK(FieldConfig::curl(f.gauge()) == b);
  FieldConfig::Gauge landau{};
  landau[1][0] = 2.0;  // A = (0, 2x, 0), B = (0, 0, 2)
  CHECK(FieldConfig::from_gauge(landau).field() == spin::RealVector3{0.0, 0.0, 2.0});
  CHECK_THROWS_AS(FieldConfig(spin::RealVector3{1.0, 0.0, 0.0}, landau), DomainError);
}

TEST_CASE("kinetic identity on a constant spinor by hand") {
  // psi = (1, 0), A = (B/2)(-y, x, 0): both sides equal (q/c)^2 A^2 psi - (hbar q / c) B sigma_z psi.
  const double bz = 1.7, q = -1.3;
  const Units u = plain_units();
  const auto field = FieldConfig::symmetric_gauge({0.0, 0.0, bz});
  auto ps = poly::PolySpinor::zero(1);
  ps.components[0] = poly::Polynomial::constant(3, 1.0);
  const auto lhs = apply_sigma_kinetic(apply_sigma_kinetic(ps, 1, field, q, u), 1, field, q, u);
  const double qc = q / u.light_speed;
  CHECK(std::abs(lhs.components[0].coefficient(ex({2, 0, 0})) - qc * qc * bz * bz / 4.0) < 1e-15);
  CHECK(std::abs(lhs.components[0].coefficient(ex({0, 2, 0})) - qc * qc * bz * bz / 4.0) < 1e-15);
  CHECK(std::abs(lhs.components[0].coefficient(ex({0, 0, 0})) + u.hbar * q * bz / u.light_speed) < 1e-15);
  CHECK(pauli_kinetic_identity_residual(field, {1.0, q}, ps, u) <= 1e-13);
}

TEST_CASE("zero field reduces to (sigma.p)^2 = p^2") {
  auto g = rng::stream(55, "quantize-poly");
  const auto field = FieldConfig::symmetric_gauge({0.0, 0.0, 0.0});
  const auto ps = rng::poly_spinor(g, 1, 4, 6);
  const Units u = plain_units();
  const auto lhs = apply_sigma_kinetic(apply_sigma_kinetic(ps, 1, field, 1.0, u), 1, field, 1.0, u);
  auto rhs = poly::PolySpinor::zero(1);
  for (std::size_t a = 0; a < 3; ++a) rhs += poly_apply_momentum(poly_apply_momentum(ps, 1, a, 1.0), 1, a, 1.0);
  CHECK(poly::max_coefficient_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("kinetic identity holds for random spinors and linear gauges") {
  auto g = rng::stream(56, "quantize-poly");
  Units u;
  u.light_speed = 3.0;  // strong coupling makes A-dependent terms visible
  for (int t = 0; t < 25; ++t) {
    FieldConfig::Gauge a{};
    for (auto& row : a)
      for (auto& x : row) x = rng::uniform(g, -1.0, 1.0);
    const auto field = FieldConfig::from_gauge(a);
    const auto ps = rng::poly_spinor(g, 1, 4, 4);
    CHECK(pauli_kinetic_identity_residual(field, {rng::uniform(g, 0.5, 2.0), rng::uniform(g, -2.0, 2.0)}, ps, u) <=
          1e-12);
  }
}

TEST_CASE("Pauli Hamiltonian: squared-block form equals expanded form") {
  auto g = rng::stream(57, "quantize-poly");
  Units u;
  u.light_speed = 5.0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (int t = 0; t < 10; ++t) {
      PauliSystem s;
      for (std::size_t k = 0; k < n; ++k) {
        s.particles.push_back({rng::uniform(g, 0.5, 2.0), rng::uniform(g, -2.0, 2.0)});
        s.fields.push_back(FieldConfig::symmetric_gauge(rng::vector3(g)));
      }
      s.potential = rng::polynomial(g, 3 * n, 2, 4);
      const auto ps = rng::poly_spinor(g, n, 3, 3);
      CHECK(pauli_hamiltonian_residual(s, ps, u) <= 1e-12);
    }
  }
}

TEST_CASE("spin interaction matrix is Hermitian and traceless") {
  PauliSystem s;
  s.particles = {{1.0, -1.0}, {3.0, 1.0}};
  s.fields = {FieldConfig::symmetric_gauge({0.0, 0.0, 2.0}), FieldConfig::symmetric_gauge({1.0, 0.0, 0.0})};
  s.potential = poly::Polynomial(6);
  const auto m = spin_interaction_matrix(s, plain_units());
  CHECK(m.rows() == 4);
  CHECK(linalg::is_hermitian(m));
  CHECK(std::abs(m.trace()) < 1e-15);
  s.fields.pop_back();
  CHECK_THROWS_AS(s.validate(), DomainError);
}
