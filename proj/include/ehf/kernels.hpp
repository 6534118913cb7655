#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version (used by the
// rest of the library) and a plain serial version in `reference` that the
// tests and benchmarks compare against. Both produce bit-identical results:
// every output element is computed by one thread with the same operation order.

#include <cstddef>
#include <functional>
#include <vector>

#include "ehf/linalg.hpp"

namespace ehf::kernels {

/// out = a * b. Shapes must already be checked.
void matmul(const linalg::ComplexMatrix& a, const linalg::ComplexMatrix& b, linalg::ComplexMatrix& out);

/// out = a (x) b with out sized (ra*rb) x (ca*cb).
void kron(const linalg::ComplexMatrix& a, const linalg::ComplexMatrix& b, linalg::ComplexMatrix& out);

/// Eigenvalue `index` (0-based, ascending) of t, bisected inside [lo, hi].
double bisect_eigenvalue(const linalg::SymmetricTridiagonal& t, std::size_t index, double lo, double hi);

/// Lowest `count` eigenvalues; one bisection per eigenvalue, spread across threads.
std::vector<double> tridiagonal_bisection(const linalg::SymmetricTridiagonal& t, std::size_t count);

/// Calls body(i) for i in [0, n); iterations must be independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

int max_threads();

namespace reference {

void matmul(const linalg::ComplexMatrix& a, const linalg::ComplexMatrix& b, linalg::ComplexMatrix& out);
void kron(const linalg::ComplexMatrix& a, const linalg::ComplexMatrix& b, linalg::ComplexMatrix& out);
std::vector<double> tridiagonal_bisection(const linalg::SymmetricTridiagonal& t, std::size_t count);
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace reference

/// Gershgorin interval [lo, hi] containing every eigenvalue of t.
std::pair<double, double> gershgorin_bounds(const linalg::SymmetricTridiagonal& t);

}  // namespace ehf::kernels
