#include <benchmark/benchmark.h>

#include <random>

#include "tvalue/genfun.hpp"
#include "tvalue/hyper.hpp"
#include "tvalue/oracle.hpp"
#include "tvalue/series.hpp"

using namespace tvalue;

static void BM_OracleDepth(benchmark::State& state) {
  std::vector<int> parts(static_cast<std::size_t>(state.range(0)), 1);
  parts[0] = 2;
  const Index admissible(parts);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::eval_t(admissible, 100001));
  state.SetItemsProcessed(state.iterations() * 50000);
}
BENCHMARK(BM_OracleDepth)->DenseRange(1, 4);

static void BM_SeriesMultiply(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  TruncatedSeries f(cap), g(cap);
  for (double& c : f.data()) c = dist(rng);
  for (double& c : g.data()) c = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SeriesMultiply)->Arg(4)->Arg(8)->Arg(12);

static void BM_RecurrenceStep(benchmark::State& state) {
  auto s = genfun::init_state(state.range(1) != 0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    s = genfun::step(std::move(s));
    benchmark::DoNotOptimize(s.c_current.data().data());
  }
}
BENCHMARK(BM_RecurrenceStep)->Args({8, 0})->Args({8, 1})->Args({12, 0});

static void BM_Phi0AtOne(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genfun::phi0_at_one(false, 8, state.range(0)));
}
BENCHMARK(BM_Phi0AtOne)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_PFQUnit(benchmark::State& state) {
  const hyper::PFQParams p{{0.5, 0.5, 1.0}, {1.5, 1.5}, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(hyper::eval_pfq(p));
}
BENCHMARK(BM_PFQUnit)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
