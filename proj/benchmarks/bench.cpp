#include <benchmark/benchmark.h>

#include "rcft/engine.hpp"
#include "rcft/field.hpp"
#include "rcft/graph.hpp"
#include "rcft/leach_c.hpp"
#include "rcft/rcft.hpp"

namespace {

using namespace rcft;

std::vector<SensorNode> field(std::size_t n) {
  NetworkConfig config;
  config.node_count = n;
  config.head_count = std::max<std::size_t>(1, n / 20);
  RngStream rng(7, "placement");
  return generate_field(config, rng);
}

void BM_BuildGraph(benchmark::State& state) {
  const auto nodes = field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(nodes, 25.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraph)->RangeMultiplier(2)->Range(100, 1600)->Complexity();

void BM_HopDistances(benchmark::State& state) {
  const auto nodes = field(static_cast<std::size_t>(state.range(0)));
  const auto graph = build_graph(nodes, 25.0);
  for (auto _ : state) benchmark::DoNotOptimize(hop_distances(graph, 0));
}
BENCHMARK(BM_HopDistances)->RangeMultiplier(2)->Range(100, 1600);

void BM_LeachCElect(benchmark::State& state) {
  const auto nodes = field(100);
  for (auto _ : state) {
    RngStream rng(1, "election");
    benchmark::DoNotOptimize(leach_c_elect(nodes, static_cast<std::size_t>(state.range(0)), 50, rng));
  }
}
BENCHMARK(BM_LeachCElect)->Arg(2)->Arg(5)->Arg(10);

void BM_RcftForm(benchmark::State& state) {
  const auto nodes = field(static_cast<std::size_t>(state.range(0)));
  const auto graph = build_graph(nodes, 25.0);
  ProtocolParams params;
  params.p = 0.05;
  for (auto _ : state) {
    RngStream rng(1, "election");
    benchmark::DoNotOptimize(rcft_form(nodes, graph, params, rng));
  }
}
BENCHMARK(BM_RcftForm)->Arg(100)->Arg(400);

void BM_RunExperiment(benchmark::State& state) {
  NetworkConfig config;
  config.rounds = 20;
  const auto protocol = static_cast<Protocol>(state.range(0));
  ProtocolParams params;
  params.p = config.head_fraction();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(config, protocol, params));
  state.SetLabel(std::string(to_string(protocol)));
}
BENCHMARK(BM_RunExperiment)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
