#include <benchmark/benchmark.h>

#include "fpmom/oracle.hpp"
#include "fpmom/recurrence.hpp"
#include "fpmom/ring.hpp"

namespace {

void BM_Decomposition(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpmom::decomposition_of(n, 2));
}
BENCHMARK(BM_Decomposition)->RangeMultiplier(4)->Range(16, 1024);

void BM_WalkCounts(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fpmom::walk_counts(2, n));
}
BENCHMARK(BM_WalkCounts)->RangeMultiplier(4)->Range(16, 1024);

// Brute force: support of G^n grows like 3^n for rank 2.
void BM_GeneratorPower(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const fpmom::RingElement g = fpmom::generating_operator(2);
  for (auto _ : state) benchmark::DoNotOptimize(fpmom::power(g, n));
}
BENCHMARK(BM_GeneratorPower)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ConditionalExpectation(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const fpmom::RingElement gn = fpmom::power(fpmom::generating_operator(2), n);
  const fpmom::Hyperword h = fpmom::Hyperword::canonical(2);
  for (auto _ : state) benchmark::DoNotOptimize(fpmom::conditional_expectation(gn, h));
  state.counters["support"] = static_cast<double>(gn.support_size());
}
BENCHMARK(BM_ConditionalExpectation)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
