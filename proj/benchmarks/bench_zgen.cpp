#include <benchmark/benchmark.h>

#include "zgraph/structure.hpp"
#include "zgraph/verifier.hpp"
#include "zgraph/zgen.hpp"

using namespace zgraph;

static void BM_EnumerateZParams(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_z_params(n));
}
BENCHMARK(BM_EnumerateZParams)->Arg(60)->Arg(210)->Arg(1260);

static void BM_Realize(benchmark::State& state) {
  const ZParams params{35, 6, 19};
  for (auto _ : state) benchmark::DoNotOptimize(realize(params));
}
BENCHMARK(BM_Realize);

static void BM_NormalSubgroups(benchmark::State& state) {
  const FiniteGroup g = realize({15, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(g));
}
BENCHMARK(BM_NormalSubgroups);

static void BM_IsomorphismOracle(benchmark::State& state) {
  const FiniteGroup a = realize({15, 4, 2});
  const FiniteGroup b = realize({15, 4, 8});
  for (auto _ : state) benchmark::DoNotOptimize(isomorphism_oracle(a, b));
}
BENCHMARK(BM_IsomorphismOracle);

static void BM_AnalyzeGroup(benchmark::State& state) {
  const FiniteGroup g = realize({35, 6, 19});
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g));
}
BENCHMARK(BM_AnalyzeGroup);

static void BM_SuiteToOrder60(benchmark::State& state) {
  const auto corpus = default_corpus(2, 60, /*extras=*/false);
  for (auto _ : state)
    benchmark::DoNotOptimize(run_suite(corpus, {}, nullptr, "bench"));
}
BENCHMARK(BM_SuiteToOrder60);

BENCHMARK_MAIN();
