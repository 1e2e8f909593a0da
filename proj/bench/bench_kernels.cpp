// OpenMP kernels against their serial references, plus the conformance
// suite run both ways.
#include <benchmark/benchmark.h>

#include "hilbert/kernels.hpp"
#include "hilbert/lemma_suite.hpp"

using namespace hilbert;

namespace {

std::vector<CScalar> random_entries(std::size_t n, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<CScalar> v(n);
  for (auto& z : v) z = rng.complex_unit_box();
  return v;
}

template <auto Kernel>
void BM_gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n * n, 1), b = random_entries(n * n, 2);
  std::vector<CScalar> c(n * n);
  for (auto _ : state) {
    Kernel(n, n, n, a, b, c);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

template <auto Kernel>
void BM_gram(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(2 * n * n, 3);
  std::vector<CScalar> g(n * n);
  for (auto _ : state) {
    Kernel(2 * n, n, a, g);
    benchmark::DoNotOptimize(g.data());
  }
}

void BM_checks(benchmark::State& state) {
  const auto mode = state.range(0) == 0 ? lemma_suite::Execution::Serial : lemma_suite::Execution::Parallel;
  for (auto _ : state) {
    auto rep = lemma_suite::run_checks(42, 6, 20, std::nullopt, {}, mode);
    benchmark::DoNotOptimize(rep);
  }
}

}  // namespace

BENCHMARK(BM_gemm<kernels::gemm_serial>)->Name("gemm/serial")->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_gemm<kernels::gemm>)->Name("gemm/omp")->Arg(32)->Arg(128)->Arg(256)->UseRealTime();
BENCHMARK(BM_gram<kernels::gram_serial>)->Name("gram/serial")->Arg(64)->Arg(192);
BENCHMARK(BM_gram<kernels::gram>)->Name("gram/omp")->Arg(64)->Arg(192)->UseRealTime();
BENCHMARK(BM_checks)->Name("checks")->Arg(0)->Arg(1)->ArgNames({"parallel"})->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
