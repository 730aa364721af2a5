#include <benchmark/benchmark.h>

#include "endprox/exact_models.hpp"
#include "endprox/limit_dists.hpp"
#include "endprox/pfold.hpp"

using namespace endprox;

static void BM_DyckDeg(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dyck_deg_counts(state.range(0)));
}
BENCHMARK(BM_DyckDeg)->Arg(250)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_MotzkinJointStream(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t cells = 0;
    for_each_motzkin_joint(state.range(0), [&](int, int, const BigInt&) { ++cells; });
    benchmark::DoNotOptimize(cells);
  }
}
BENCHMARK(BM_MotzkinJointStream)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_MotzkinStemHelices(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hel_stm_counts(Model::Motzkin, state.range(0), Stat::StemHelices));
  }
}
BENCHMARK(BM_MotzkinStemHelices)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_PfoldJoint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pfold_joint_probs(state.range(0), PfoldParams{}));
}
BENCHMARK(BM_PfoldJoint)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_PfoldRhoDelta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pfold_rho_delta());
}
BENCHMARK(BM_PfoldRhoDelta)->Unit(benchmark::kMicrosecond);

static void BM_EteLimitMoments(benchmark::State& state) {
  const auto model = static_cast<Model>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ete_limit_moments(model));
}
BENCHMARK(BM_EteLimitMoments)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
