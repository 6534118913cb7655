#include "ehf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#ifdef EHF_HAVE_OPENMP
#include <omp.h>
#endif

namespace ehf::kernels {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::SymmetricTridiagonal;

namespace {

void matmul_row(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out, std::size_t i) {
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  for (std::size_t j = 0; j < cols; ++j) out(i, j) = Complex{};
  for (std::size_t k = 0; k < inner; ++k) {
    const Complex aik = a(i, k);
    if (aik == Complex{}) continue;
    for (std::size_t j = 0; j < cols; ++j) out(i, j) += aik * b(k, j);
  }
}

void kron_row(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out, std::size_t row) {
  const std::size_t rb = b.rows();
  const std::size_t cb = b.cols();
  const std::size_t i = row / rb;
  const std::size_t p = row % rb;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Complex aij = a(i, j);
    for (std::size_t q = 0; q < cb; ++q) out(row, j * cb + q) = aij * b(p, q);
  }
}

}  // namespace

std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& t) {
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off_diagonal[i]);
    lo = std::min(lo, t.diagonal[i] - radius);
    hi = std::max(hi, t.diagonal[i] + radius);
  }
  const double pad = 1e-14 * std::max(std::abs(lo), std::abs(hi)) + 1e-300;
  return {lo - pad, hi + pad};
}

double bisect_eigenvalue(const SymmetricTridiagonal& t, std::size_t index, double lo, double hi) {
  // Invariant: count_below(lo) <= index < count_below(hi).
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (t.count_below(mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (rows * static_cast<std::ptrdiff_t>(b.cols()) > 4096)
  for (std::ptrdiff_t i = 0; i < rows; ++i) matmul_row(a, b, out, static_cast<std::size_t>(i));
}

void kron(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  const auto rows = static_cast<std::ptrdiff_t>(out.rows());
#pragma omp parallel for schedule(static) if (rows > 64)
  for (std::ptrdiff_t r = 0; r < rows; ++r) kron_row(a, b, out, static_cast<std::size_t>(r));
}

std::vector<double> tridiagonal_bisection(const SymmetricTridiagonal& t, std::size_t count) {
  count = std::min(count, t.size());
  std::vector<double> values(count);
  const auto [lo, hi] = gershgorin_bounds(t);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = bisect_eigenvalue(t, static_cast<std::size_t>(k), lo, hi);
  }
  return values;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const auto count = static_cast<std::ptrdiff_t>(n);
  // Exceptions cannot cross the parallel region; keep the lowest-index one.
  std::exception_ptr error;
  std::ptrdiff_t error_index = count;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ehf_parallel_for_error)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

int max_threads() {
#ifdef EHF_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace reference {

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
}

void kron(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  for (std::size_t r = 0; r < out.rows(); ++r) kron_row(a, b, out, r);
}

std::vector<double> tridiagonal_bisection(const SymmetricTridiagonal& t, std::size_t count) {
  count = std::min(count, t.size());
  std::vector<double> values(count);
  const auto [lo, hi] = gershgorin_bounds(t);
  for (std::size_t k = 0; k < count; ++k) values[k] = bisect_eigenvalue(t, k, lo, hi);
  return values;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace reference

}  // namespace ehf::kernels
