#include <benchmark/benchmark.h>

#include "dho/derivation.hpp"
#include "dho/reference_solver.hpp"
#include "dho/wavefunction.hpp"

static void BM_Derive(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dho::derive(2, order));
}
BENCHMARK(BM_Derive)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Eigenpairs(benchmark::State& state) {
  const double omega = 1.0 / static_cast<double>(state.range(0));
  const long j0 = dho::select_dimension(omega, 5, dho::DimensionRule::Tail);
  const auto op = dho::build_tridiagonal(omega, 0.25, j0, dho::ParityMode::None);
  for (auto _ : state) benchmark::DoNotOptimize(dho::eigenpairs(op, 6));
  state.counters["dimension"] = static_cast<double>(op.size());
}
BENCHMARK(BM_Eigenpairs)->RangeMultiplier(4)->Range(4, 1024)->Unit(benchmark::kMicrosecond);

static void BM_AssembleEigenvector(benchmark::State& state) {
  const long m = state.range(0);
  const double omega = 0.001;
  const long j0 = dho::default_truncation(4, m, omega);
  for (auto _ : state) benchmark::DoNotOptimize(dho::assemble_eigenvector(4, m, omega, 0, j0));
}
BENCHMARK(BM_AssembleEigenvector)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
