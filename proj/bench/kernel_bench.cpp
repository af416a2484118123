#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "commwalk/gen.hpp"
#include "commwalk/kernels.hpp"
#include "commwalk/louvain.hpp"
#include "commwalk/rwgp.hpp"

namespace {

using namespace commwalk;

// Ten planted groups, mean degree about 10.
const LabeledGraph& graph_for(std::int64_t edges) {
  static std::vector<std::pair<std::int64_t, LabeledGraph>> cache;
  for (const auto& [m, lg] : cache)
    if (m == edges) return lg;
  const std::size_t g = static_cast<std::size_t>(edges) / 50;
  cache.emplace_back(edges, planted_l_partition({10, g, 9.0 / static_cast<double>(g - 1),
                                                 1.0 / static_cast<double>(g * 9), 1}));
  return cache.back().second;
}

std::vector<double> start_vector(std::size_t n) {
  std::vector<double> v(n);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double& x : v) x = unit(rng);
  return v;
}

template <auto Kernel>
void walk_step(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0)).graph;
  const auto cur = start_vector(g.n());
  std::vector<double> scaled(g.n()), next(g.n());
  for (auto _ : state) {
    Kernel(g, cur, scaled, next, 0.0);
    benchmark::DoNotOptimize(next.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.nnz()));
}

template <auto Kernel>
void internal_weight(benchmark::State& state) {
  const LabeledGraph& lg = graph_for(state.range(0));
  std::vector<double> out(lg.graph.n());
  for (auto _ : state) {
    Kernel(lg.graph, lg.truth.labels(), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lg.graph.nnz()));
}

void rwgp_partition_run(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0)).graph;
  RwgpConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(rwgp_partition(g, cfg));
}

void rwgp_louvain_run(benchmark::State& state) {
  const Graph& g = graph_for(state.range(0)).graph;
  LouvainConfig cfg;
  cfg.rwgp = RwgpConfig{};
  for (auto _ : state) benchmark::DoNotOptimize(louvain(g, cfg));
}

}  // namespace

BENCHMARK(walk_step<kernels::walk_step_serial>)->Name("walk_step/serial")->RangeMultiplier(10)->Range(10000, 1000000);
BENCHMARK(walk_step<kernels::walk_step_omp>)->Name("walk_step/omp")->RangeMultiplier(10)->Range(10000, 1000000);
BENCHMARK(internal_weight<kernels::internal_weight_serial>)
    ->Name("internal_weight/serial")
    ->RangeMultiplier(10)
    ->Range(10000, 1000000);
BENCHMARK(internal_weight<kernels::internal_weight_omp>)
    ->Name("internal_weight/omp")
    ->RangeMultiplier(10)
    ->Range(10000, 1000000);
BENCHMARK(rwgp_partition_run)->Name("rwgp_partition")->RangeMultiplier(10)->Range(10000, 100000)->Unit(benchmark::kMillisecond);
BENCHMARK(rwgp_louvain_run)->Name("rwgp_louvain")->RangeMultiplier(10)->Range(10000, 100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
