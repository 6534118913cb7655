// OpenMP kernels against their serial reference.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ehf/extham.hpp"
#include "ehf/kernels.hpp"
#include "ehf/random.hpp"

using namespace ehf;

namespace {

template <auto Kernel>
void bm_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = rng::stream(1, "bench/matmul");
  const auto a = rng::matrix(g, n, n);
  const auto b = rng::matrix(g, n, n);
  linalg::ComplexMatrix out(n, n);
  for (auto _ : state) {
    Kernel(a, b, out);
    benchmark::DoNotOptimize(out(0, 0));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n * n));
}

template <auto Kernel>
void bm_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = rng::stream(2, "bench/kron");
  const auto a = rng::matrix(g, n, n);
  const auto b = rng::matrix(g, n, n);
  linalg::ComplexMatrix out(n * n, n * n);
  for (auto _ : state) {
    Kernel(a, b, out);
    benchmark::DoNotOptimize(out(0, 0));
  }
}

linalg::SymmetricTridiagonal laplacian(std::size_t n) {
  linalg::SymmetricTridiagonal t;
  t.diagonal.assign(n, 2.0);
  t.off_diagonal.assign(n - 1, -1.0);
  return t;
}

template <auto Kernel>
void bm_bisection(benchmark::State& state) {
  const auto t = laplacian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(t, 64));
}

template <auto Kernel>
void bm_det_batch(benchmark::State& state) {
  const auto particles = static_cast<std::size_t>(state.range(0));
  auto g = rng::stream(3, "bench/det");
  std::vector<extham::SystemSample> samples;
  for (int i = 0; i < 64; ++i) samples.push_back(rng::system_sample(g, particles));
  std::vector<double> err(samples.size());
  for (auto _ : state) {
    Kernel(samples.size(), [&](std::size_t i) { err[i] = extham::verify_det_identity(samples[i]).max_rel_err; });
    benchmark::DoNotOptimize(err.data());
  }
}

constexpr auto kMatmul = static_cast<void (*)(const linalg::ComplexMatrix&, const linalg::ComplexMatrix&,
                                              linalg::ComplexMatrix&)>(kernels::matmul);
constexpr auto kMatmulRef = static_cast<void (*)(const linalg::ComplexMatrix&, const linalg::ComplexMatrix&,
                                                 linalg::ComplexMatrix&)>(kernels::reference::matmul);

}  // namespace

BENCHMARK(bm_matmul<kMatmul>)->Name("matmul/omp")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_matmul<kMatmulRef>)->Name("matmul/serial")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_kron<kernels::kron>)->Name("kron/omp")->Arg(16)->Arg(32);
BENCHMARK(bm_kron<kernels::reference::kron>)->Name("kron/serial")->Arg(16)->Arg(32);
BENCHMARK(bm_bisection<kernels::tridiagonal_bisection>)->Name("bisection/omp")->Arg(2000)->Arg(20000);
BENCHMARK(bm_bisection<kernels::reference::tridiagonal_bisection>)->Name("bisection/serial")->Arg(2000)->Arg(20000);
BENCHMARK(bm_det_batch<kernels::parallel_for>)->Name("det_batch/omp")->Arg(2)->Arg(3);
BENCHMARK(bm_det_batch<kernels::reference::parallel_for>)->Name("det_batch/serial")->Arg(2)->Arg(3);

BENCHMARK_MAIN();
