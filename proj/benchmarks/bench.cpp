#include <benchmark/benchmark.h>

#include "qcorr/discord.hpp"
#include "qcorr/harness.hpp"

using namespace qcorr;

static void BM_VonNeumannEntropy(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto rho = random_density(d, d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(von_neumann_entropy(rho));
}
BENCHMARK(BM_VonNeumannEntropy)->Arg(4)->Arg(16)->Arg(64);

static void BM_PartialTrace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const BipartiteState s(random_density(d * d, d * d, 2), d, d);
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(s, Subsystem::B));
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(8);

static void BM_ChannelApply(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int d = static_cast<int>(state.range(0));
  const auto ch = random_channel(d, 4, rng);
  const auto rho = random_density(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply(ch, rho));
}
BENCHMARK(BM_ChannelApply)->Arg(4)->Arg(16);

static void BM_ChoiMatrix(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto ch = random_channel(static_cast<int>(state.range(0)), 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(choi_matrix(ch));
}
BENCHMARK(BM_ChoiMatrix)->Arg(4)->Arg(16);

static void BM_PetzMap(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int d = static_cast<int>(state.range(0));
  const auto ch = random_channel(d, 3, rng);
  const auto sigma = random_density(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(petz_map(ch, sigma));
}
BENCHMARK(BM_PetzMap)->Arg(2)->Arg(4)->Arg(8);

static void BM_ClassicalCorrelation(benchmark::State& state) {
  const BipartiteState s(random_density(4, 4, 6), 2, 2);
  OptimizerConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(classical_correlation(s, Subsystem::A, cfg));
}
BENCHMARK(BM_ClassicalCorrelation)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
