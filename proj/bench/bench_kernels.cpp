#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "sfperm/radar.hpp"
#include "sfperm/receiver.hpp"
#include "sfperm/simkit.hpp"

using namespace sfperm;

namespace {

SimConfig sweep_config() {
  SimConfig c;
  c.m = 6;
  c.n_antennas = 2;
  c.channel = ChannelKind::kRician;
  c.rician_k = 1.0;
  c.snr_db = {6.0};
  c.trials = 20000;
  return c;
}

void BM_SweepSerial(benchmark::State& state) {
  const SimConfig c = sweep_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_bler_sweep_serial(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

void BM_SweepParallel(benchmark::State& state) {
  SimConfig c = sweep_config();
  c.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_bler_sweep(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.trials));
}

struct AfSetup {
  WaveformParams w;
  Permutation p = Permutation::identity(8);
  std::vector<double> taus = linear_axis(-8.0, 8.0, 161);
  std::vector<double> oms = linear_axis(-16.0 * std::numbers::pi, 16.0 * std::numbers::pi, 161);
  AfSetup() { w.m = 8; }
};

void BM_AfGridSerial(benchmark::State& state) {
  const AfSetup s;
  for (auto _ : state) benchmark::DoNotOptimize(af_grid_serial(s.p, s.w, s.taus, s.oms));
}

void BM_AfGridParallel(benchmark::State& state) {
  const AfSetup s;
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(af_grid(s.p, s.w, s.taus, s.oms, workers));
}

CorrelationMatrix random_matrix(int m) {
  std::mt19937_64 gen(static_cast<std::uint64_t>(m));
  std::normal_distribution<double> g;
  CorrelationMatrix r(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r(i, j) = g(gen);
  return r;
}

void BM_Hungarian(benchmark::State& state) {
  const CorrelationMatrix r = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hungarian_detect(r));
}

void BM_Exhaustive(benchmark::State& state) {
  const CorrelationMatrix r = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_detect(r));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AfGridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AfGridParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Hungarian)->DenseRange(4, 10, 2)->Arg(16)->Arg(20);
BENCHMARK(BM_Exhaustive)->DenseRange(4, 10, 2);

BENCHMARK_MAIN();
