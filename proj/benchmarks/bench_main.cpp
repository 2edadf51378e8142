#include <benchmark/benchmark.h>

#include "clusterwalk/decompose.hpp"
#include "clusterwalk/flow.hpp"
#include "clusterwalk/generate.hpp"
#include "clusterwalk/oracle.hpp"
#include "clusterwalk/planner.hpp"

using namespace clusterwalk;

namespace {

void BM_Plan(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  auto [a, b] = random_clustering_pair(n, k, 42);
  for (auto _ : state) {
    TransformationPlan p = plan(a, b);
    benchmark::DoNotOptimize(p.moves.size());
  }
}
BENCHMARK(BM_Plan)->Args({40, 8})->Args({200, 12})->Args({1000, 16});

void BM_PlanBounded(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  auto [a, b] = random_clustering_pair(n, k, 43);
  std::vector<int> sa = a.cluster_sizes(), sb = b.cluster_sizes();
  std::vector<int> lower(k, 0), upper(k);
  for (int i = 0; i < k; ++i) upper[i] = std::max(sa[i], sb[i]) + 2;
  SizeBounds bounds(lower, upper);
  for (auto _ : state) {
    BoundedPlanResult r = plan_bounded(a, b, bounds);
    benchmark::DoNotOptimize(r.plan.moves.size());
  }
}
BENCHMARK(BM_PlanBounded)->Args({40, 8})->Args({200, 12});

void BM_Decompose(benchmark::State& state) {
  auto [a, b] = random_clustering_pair(static_cast<int>(state.range(0)), 12, 7);
  ClusteringDifferenceGraph g = build_cdg(a, b);
  auto strategy = static_cast<DecomposeStrategy>(state.range(1));
  for (auto _ : state) {
    PathCycleDecomposition d = path_cycle_decompose(g, strategy);
    benchmark::DoNotOptimize(d.paths.size());
  }
}
BENCHMARK(BM_Decompose)->Args({200, 0})->Args({200, 1})->Args({200, 2});

void BM_MaxFlow(benchmark::State& state) {
  Rng rng(5);
  FlowNetwork net;
  net.node_count = 26;
  for (int i = 0; i < 120; ++i) {
    int u = rng.next(26), v = rng.next(26);
    if (u == v) v = (v + 1) % 26;
    net.arcs.push_back(FlowArc{u, v, 0, 1 + rng.next(4), 0});
  }
  for (auto _ : state) {
    MaxFlowResult r = max_flow(net, 0, 25);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_MaxFlow);

void BM_ExactDistance(benchmark::State& state) {
  auto [a, b] = random_clustering_pair(static_cast<int>(state.range(0)), 4, 11);
  for (auto _ : state) {
    ExactDistance d = exact_distance(a, b, std::nullopt);
    benchmark::DoNotOptimize(d.distance);
  }
}
BENCHMARK(BM_ExactDistance)->Arg(5)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
