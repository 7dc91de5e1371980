#include <benchmark/benchmark.h>

#include "zgraph/constructions.hpp"
#include "zgraph/graph.hpp"
#include "zgraph/zgen.hpp"

using namespace zgraph;

static void BM_CyclicGraphBuild(benchmark::State& state) {
  const FiniteGroup g = cyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_graph(g));
}
BENCHMARK(BM_CyclicGraphBuild)->Arg(60)->Arg(210)->Arg(512)->Arg(1024);

static void BM_CyclicGraphBuildNaive(benchmark::State& state) {
  const FiniteGroup g = cyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_graph_naive(g));
}
BENCHMARK(BM_CyclicGraphBuildNaive)->Arg(60)->Arg(210);

// dense worst case: the complete graph on n-1 vertices
static void BM_DiameterComplete(benchmark::State& state) {
  const Graph g = cyclic_graph(cyclic_group(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
}
BENCHMARK(BM_DiameterComplete)->Arg(60)->Arg(210)->Arg(512)->Arg(1024);

static void BM_DiameterSparse60(benchmark::State& state) {
  const Graph g = cyclic_graph(realize({15, 4, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
}
BENCHMARK(BM_DiameterSparse60);

static void BM_EnhancedPowerGraph(benchmark::State& state) {
  const FiniteGroup g = dicyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enhanced_power_graph(g));
}
BENCHMARK(BM_EnhancedPowerGraph)->Arg(8)->Arg(32)->Arg(128);
