#include <benchmark/benchmark.h>

#include "endprox/rng.hpp"
#include "endprox/samplers.hpp"
#include "endprox/structure.hpp"

using namespace endprox;

namespace {

std::string sampled_text(int n) {
  Rng rng(5);
  return to_dot_bracket(sample_motzkin(n, rng));
}

}  // namespace

static void BM_ParseDotBracket(benchmark::State& state) {
  const auto text = sampled_text(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parse_dot_bracket(text));
}
BENCHMARK(BM_ParseDotBracket)->Arg(100)->Arg(10000);

static void BM_ExteriorStats(benchmark::State& state) {
  const auto s = parse_dot_bracket(sampled_text(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exterior_stats(s));
}
BENCHMARK(BM_ExteriorStats)->Arg(100)->Arg(10000);

static void BM_ShortestPath(benchmark::State& state) {
  const auto s = parse_dot_bracket(sampled_text(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shortest_path_stats(s));
}
BENCHMARK(BM_ShortestPath)->Arg(100)->Arg(10000);

static void BM_ShortestPathPseudoknot(benchmark::State& state) {
  std::string text;
  for (int i = 0; i < state.range(0); ++i) text += "((..[[..))..]]..";
  const auto s = parse_dot_bracket(text);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_path_stats(s));
}
BENCHMARK(BM_ShortestPathPseudoknot)->Arg(10)->Arg(500);
