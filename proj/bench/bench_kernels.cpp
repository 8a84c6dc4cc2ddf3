// Serial reference vs OpenMP kernels on the matrices the cohomology
// computation actually builds.

#include "mcgcoh/cocycle.hpp"
#include "mcgcoh/kernels.hpp"
#include "mcgcoh/smith.hpp"
#include "mcgcoh/wajnryb.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace mcgcoh;

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (auto& x : m.row(r)) x = dist(rng);
  return m;
}

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix a = random_matrix(n, n, 1);
  const IntMatrix b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(a, b, exec_of(state)));
}
BENCHMARK(BM_Multiply)->ArgsProduct({{32, 96}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RelatorSystem(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const auto wp = wajnryb_presentation(genus);
  const auto rep = humphries_representation(genus).second;
  for (auto _ : state) benchmark::DoNotOptimize(relator_system(wp.presentation, rep, exec_of(state)));
}
BENCHMARK(BM_RelatorSystem)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_KernelOfRelatorSystem(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const auto wp = wajnryb_presentation(genus);
  const auto rep = humphries_representation(genus).second;
  const IntMatrix system = relator_system(wp.presentation, rep, Execution::serial);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(system, exec_of(state)));
}
BENCHMARK(BM_KernelOfRelatorSystem)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_FullSnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n + n / 2, n, 3);
  SnfOptions opt;
  opt.execution = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m, opt));
}
BENCHMARK(BM_FullSnf)->ArgsProduct({{12, 24}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
