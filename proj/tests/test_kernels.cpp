#include <doctest.h>

#include <atomic>
#include <vector>

#include "ehf/errors.hpp"
#include "ehf/kernels.hpp"
#include "ehf/random.hpp"

using namespace ehf;
using namespace ehf::linalg;

// The parallel kernels share their per-row code with the serial reference, so
// results must be bit-identical, not merely close.

TEST_CASE("parallel matmul equals the serial reference exactly") {
  auto g = rng::stream(11, "kernels");
  for (const std::size_t n : {1u, 7u, 33u, 80u}) {
    const auto a = rng::matrix(g, n, n + 3);
    const auto b = rng::matrix(g, n + 3, n);
    ComplexMatrix p(n, n), s(n, n);
    kernels::matmul(a, b, p);
    kernels::reference::matmul(a, b, s);
    CHECK(p == s);
  }
}

TEST_CASE("parallel kron equals the serial reference exactly") {
  auto g = rng::stream(12, "kernels");
  const auto a = rng::matrix(g, 4, 3);
  const auto b = rng::matrix(g, 5, 6);
  ComplexMatrix p(20, 18), s(20, 18);
  kernels::kron(a, b, p);
  kernels::reference::kron(a, b, s);
  CHECK(p == s);
}

TEST_CASE("parallel bisection equals the serial reference exactly") {
  auto g = rng::stream(13, "kernels");
  SymmetricTridiagonal t;
  for (int i = 0; i < 300; ++i) t.diagonal.push_back(rng::uniform(g, -5.0, 5.0));
  for (int i = 0; i < 299; ++i) t.off_diagonal.push_back(rng::uniform(g, -1.0, 1.0));
  CHECK(kernels::tridiagonal_bisection(t, 40) == kernels::reference::tridiagonal_bisection(t, 40));
  const auto [lo, hi] = kernels::gershgorin_bounds(t);
  const auto all = kernels::tridiagonal_bisection(t, 300);
  CHECK(all.front() >= lo);
  CHECK(all.back() <= hi);
}

TEST_CASE("parallel_for visits every index once and propagates errors") {
  std::vector<int> hits(1000, 0);
  kernels::parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (const int h : hits) CHECK(h == 1);

  CHECK_THROWS_AS(kernels::parallel_for(50,
                                        [](std::size_t i) {
                                          if (i == 17) throw DomainError("boom");
                                        }),
                  DomainError);
  CHECK(kernels::max_threads() >= 1);
}
