#pragma once

// Seeded sampling helpers. One master seed is split into independent
// per-suite streams by name, so adding or reordering suites does not
// change what any other suite draws.

#include <cstdint>
#include <random>
#include <string_view>

#include "ehf/extham.hpp"
#include "ehf/linalg.hpp"
#include "ehf/polynomial.hpp"
#include "ehf/spin.hpp"

namespace ehf::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

using Engine = std::mt19937_64;

/// Independent engine for `suite` derived from the master seed.
inline Engine stream(std::uint64_t seed, std::string_view suite) {
  return Engine(splitmix64(seed ^ splitmix64(fnv1a(suite))));
}

// Uniform draws are done by hand so results do not depend on the standard
// library's distribution implementation.
inline double uniform(Engine& g, double lo, double hi) {
  const double u = static_cast<double>(g() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

inline std::size_t uniform_index(Engine& g, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(g() % (hi - lo + 1));
}

inline spin::RealVector3 vector3(Engine& g, double scale = 1.0) {
  const double x = uniform(g, -scale, scale);
  const double y = uniform(g, -scale, scale);
  const double z = uniform(g, -scale, scale);
  return {x, y, z};
}

inline linalg::Complex complex(Engine& g, double scale = 1.0) {
  const double re = uniform(g, -scale, scale);
  const double im = uniform(g, -scale, scale);
  return {re, im};
}

inline linalg::ComplexMatrix matrix(Engine& g, std::size_t rows, std::size_t cols, double scale = 1.0) {
  linalg::ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = complex(g, scale);
  return m;
}

/// Diagonally shifted random matrix; well conditioned enough for block checks.
inline linalg::ComplexMatrix well_conditioned(Engine& g, std::size_t n) {
  auto m = matrix(g, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += static_cast<double>(n);
  return m;
}

/// Random N-particle sample with masses in [0.5, 3], charges in [-2, 2]. Off shell in general.
inline extham::SystemSample system_sample(Engine& g, std::size_t particles) {
  extham::SystemSample s;
  for (std::size_t k = 0; k < particles; ++k) {
    const double mass = uniform(g, 0.5, 3.0);
    const double charge = uniform(g, -2.0, 2.0);
    s.particles.push_back({mass, charge});
    s.momenta.push_back(vector3(g));
    s.potentials.push_back(vector3(g, 20.0));
  }
  s.scalar_potential = uniform(g, -1.0, 1.0);
  s.energy = uniform(g, -1.0, 2.0);
  return s;
}

inline extham::Sample1D sample_1d(Engine& g) {
  extham::Sample1D s;
  s.mass = uniform(g, 0.5, 3.0);
  s.momentum = uniform(g, -2.0, 2.0);
  s.potential = uniform(g, -1.0, 1.0);
  s.energy = uniform(g, -1.0, 2.0);
  return s;
}

/// Random polynomial with `terms` monomials of total degree <= degree.
inline poly::Polynomial polynomial(Engine& g, std::size_t variables, int degree, std::size_t terms,
                                   int max_degree = poly::kDefaultMaxDegree) {
  poly::Polynomial p(variables, max_degree);
  for (std::size_t t = 0; t < terms; ++t) {
    poly::Exponents e{};
    const int d = static_cast<int>(uniform_index(g, 0, static_cast<std::size_t>(degree)));
    for (int k = 0; k < d; ++k) ++e[uniform_index(g, 0, variables - 1)];
    p.add_term(e, complex(g));
  }
  return p;
}

inline poly::PolySpinor poly_spinor(Engine& g, std::size_t particles, int degree, std::size_t terms,
                                    int max_degree = poly::kDefaultMaxDegree) {
  auto ps = poly::PolySpinor::zero(particles, max_degree);
  for (auto& c : ps.components) c = polynomial(g, 3 * particles, degree, terms, max_degree);
  return ps;
}

}  // namespace ehf::rng
