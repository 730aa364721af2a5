#include <benchmark/benchmark.h>

#include "endprox/rng.hpp"
#include "endprox/samplers.hpp"
#include "endprox/shuffle.hpp"

using namespace endprox;

static void BM_SampleDyck(benchmark::State& state) {
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_dyck(state.range(0), rng));
}
BENCHMARK(BM_SampleDyck)->Arg(100)->Arg(1000);

static void BM_MotzkinSamplerSetup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(MotzkinSampler(state.range(0)));
}
BENCHMARK(BM_MotzkinSamplerSetup)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_SampleMotzkin(benchmark::State& state) {
  const MotzkinSampler sampler(state.range(0));
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng));
}
BENCHMARK(BM_SampleMotzkin)->Arg(200)->Arg(2000);

static void BM_SamplePfold(benchmark::State& state) {
  const PfoldSampler sampler(state.range(0), PfoldParams{});
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(rng));
}
BENCHMARK(BM_SamplePfold)->Arg(200)->Arg(2000);

static void BM_Shuffle(benchmark::State& state) {
  Rng rng(4);
  std::string s(state.range(0), 'A');
  for (auto& c : s) c = "ACGU"[rng.below(4)];
  for (auto _ : state) benchmark::DoNotOptimize(klet_shuffle(s, 2, rng));
}
BENCHMARK(BM_Shuffle)->Arg(100)->Arg(10000);
