#include <benchmark/benchmark.h>

#include <numeric>

#include "sextic/census.hpp"

namespace {

using namespace sextic;

void Enumerate(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_conductors(1, 1, limit, workers));
}
BENCHMARK(Enumerate)
    ->Args({1'000'000, 1})
    ->Args({100'000'000, 1})
    ->Args({100'000'000, 4})
    ->Unit(benchmark::kMillisecond);

void SquarefreeBatch(benchmark::State& state) {
  std::vector<std::uint64_t> values(4096);
  std::iota(values.begin(), values.end(), 9'999'000'000ULL);
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_batch(values));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(values.size()));
}
BENCHMARK(SquarefreeBatch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
