#include "ehf/spin.hpp"

#include <algorithm>
#include <string>

#include "ehf/errors.hpp"

namespace ehf::spin {

namespace {

std::size_t axis_index(SpinAxis a) { return static_cast<std::size_t>(a) - 1; }

SpinAxis completing_axis(SpinAxis a, SpinAxis b) {
  // 1+2+3 = 6.
  const int third = 6 - static_cast<int>(a) - static_cast<int>(b);
  return static_cast<SpinAxis>(std::clamp(third, 1, 3));
}

// Levi-Civita sign of the cyclic order (a, b, c).
int levi_civita(SpinAxis a, SpinAxis b, SpinAxis c) {
  const int i = static_cast<int>(a), j = static_cast<int>(b), k = static_cast<int>(c);
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

SpinSite::SpinSite(std::size_t j, std::size_t n) : j_(j), n_(n) {
  if (n == 0 || j == 0 || j > n) {
    throw DomainError("spin site requires 1 <= j <= n, got j=" + std::to_string(j) + ", n=" + std::to_string(n));
  }
}

ComplexMatrix pauli(SpinAxis axis) {
  using namespace std::complex_literals;
  switch (axis) {
    case SpinAxis::x:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case SpinAxis::y:
      return {{0.0, -1i}, {1i, 0.0}};
    case SpinAxis::z:
      return {{1.0, 0.0}, {0.0, -1.0}};
  }
  throw DomainError("unknown spin axis");
}

ComplexMatrix embed_spin(SpinAxis axis, SpinSite site, std::size_t max_particles) {
  const std::size_t n = site.count();
  if (n > max_particles) {
    throw DimensionError("embed_spin: " + std::to_string(n) + " particles exceeds the configured maximum " +
                         std::to_string(max_particles));
  }
  const std::size_t left = std::size_t{1} << (site.particle() - 1);
  const std::size_t right = std::size_t{1} << (n - site.particle());
  const std::size_t max_dim = std::size_t{1} << max_particles;
  return linalg::kron(linalg::kron(ComplexMatrix::identity(left), pauli(axis), max_dim),
                      ComplexMatrix::identity(right), max_dim);
}

ComplexMatrix sigma_dot(RealVector3 v, SpinSite site, std::size_t max_particles) {
  const std::size_t dim = std::size_t{1} << site.count();
  ComplexMatrix out(dim, dim);
  for (SpinAxis a : kAxes) {
    const double c = v[axis_index(a)];
    if (c != 0.0) out += c * embed_spin(a, site, max_particles);
  }
  return out;
}

double pauli_product_identity_residual(RealVector3 alpha, RealVector3 beta, SpinSite site) {
  using namespace std::complex_literals;
  const std::size_t dim = std::size_t{1} << site.count();
  const ComplexMatrix lhs = sigma_dot(alpha, site) * sigma_dot(beta, site);
  const ComplexMatrix rhs =
      dot(alpha, beta) * ComplexMatrix::identity(dim) + 1i * sigma_dot(cross(alpha, beta), site);
  return linalg::max_abs_diff(lhs, rhs);
}

CommutatorReport commutator_table(std::size_t n) {
  if (n == 0 || n > kDefaultMaxParticles) {
    throw DimensionError("commutator_table: particle count must be 1.." + std::to_string(kDefaultMaxParticles));
  }
  CommutatorReport report{n, {}, Complex{}, Complex{0.0, 1.0}, false, true, 0.0};
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (SpinAxis a : kAxes) {
        for (SpinAxis b : kAxes) {
          const ComplexMatrix sa = embed_spin(a, SpinSite(j, n));
          const ComplexMatrix sb = embed_spin(b, SpinSite(k, n));
          const ComplexMatrix comm = sa * sb - sb * sa;
          CommutatorEntry e{a, b, j, k, Complex{}, completing_axis(a, b), 0.0, comm.max_abs() == 0.0};
          if (!e.vanishes && a != b) {
            const ComplexMatrix target = embed_spin(e.target, SpinSite(j, n));
            // target is Hermitian and squares to I, so tr(target * comm) / dim projects out c.
            e.coefficient = (target * comm).trace() / static_cast<double>(dim);
            e.residual = linalg::max_abs_diff(comm, e.coefficient * target);
          } else if (!e.vanishes) {
            e.residual = comm.max_abs();
          }
          if (j != k && !e.vanishes) report.cross_site_exact_zero = false;
          if (j == k) {
            report.max_relation_residual = std::max(report.max_relation_residual, e.residual);
            if (a == SpinAxis::x && b == SpinAxis::y && j == 1) report.same_site_constant = e.coefficient;
          }
          report.entries.push_back(e);
        }
      }
    }
  }
  report.matches_unit_constant = report.same_site_constant == Complex(0.0, 1.0);
  // Whole table against c * eps_abc * delta_jk.
  for (const auto& e : report.entries) {
    const Complex expected =
        e.j == e.k ? static_cast<double>(levi_civita(e.a, e.b, e.target)) * report.same_site_constant : Complex{};
    report.max_relation_residual = std::max(report.max_relation_residual, std::abs(e.coefficient - expected));
  }
  return report;
}

}  // namespace ehf::spin
