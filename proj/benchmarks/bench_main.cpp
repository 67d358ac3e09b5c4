#include <benchmark/benchmark.h>

#include "bcn/assr.hpp"
#include "bcn/oracle.hpp"
#include "bcn/random.hpp"
#include "bcn/spectral.hpp"

namespace {

void BM_Compile(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  const bcn::NetworkDef net = bcn::random_network(n, 3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bcn::compile(net, {.threads = threads}));
  }
  state.SetComplexityN(std::int64_t{1} << (n + 3));
}
BENCHMARK(BM_Compile)
    ->ArgsProduct({{4, 6, 8, 10}, {1}})
    ->Args({10, 4})
    ->Unit(benchmark::kMillisecond);

void BM_PerronRoot(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const bcn::AssrModel model(n, 3, bcn::random_transition(n, 3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(bcn::perron_root(model.merged()));
}
BENCHMARK(BM_PerronRoot)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const bcn::AssrModel model(n, 3, bcn::random_transition(n, 3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(bcn::analyze(model));
}
BENCHMARK(BM_Analyze)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_CountWalks(benchmark::State& state) {
  const bcn::AssrModel model(8, 3, bcn::random_transition(8, 3, 4));
  const auto j = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bcn::count_walks(model.merged(), j));
}
BENCHMARK(BM_CountWalks)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
