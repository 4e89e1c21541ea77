// Serial reference vs OpenMP kernels over A_k.

#include <benchmark/benchmark.h>

#include "parsym/diagram.hpp"
#include "parsym/kernels.hpp"

using namespace parsym;

namespace {

bool irreducible(const PartitionDiagram& d) { return is_tensor_irreducible(d); }

void BM_CountIrreducibleSerial(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::count_if(k, irreducible));
}

void BM_CountIrreducibleOmp(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::count_if(k, irreducible));
}

void BM_HistogramMSerial(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::histogram(k, m_statistic));
}

void BM_HistogramMOmp(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::histogram(k, m_statistic));
}

}  // namespace

BENCHMARK(BM_CountIrreducibleSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountIrreducibleOmp)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramMSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramMOmp)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
