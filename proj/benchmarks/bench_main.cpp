#include <benchmark/benchmark.h>

#include "oddpack/covers.hpp"
#include "oddpack/enumerate.hpp"
#include "oddpack/generators.hpp"
#include "oddpack/linkage.hpp"
#include "oddpack/packing.hpp"
#include "oddpack/partitions.hpp"

using namespace oddpack;

namespace {

Graph gnp(int n, double p, std::uint64_t seed) { return sample_random({Family::random_gnp, n, p, seed, 0, 0, 0, {}}); }

}  // namespace

static void BM_MinOddCycleCover(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(min_odd_cycle_cover(g));
}
BENCHMARK(BM_MinOddCycleCover)->Arg(12)->Arg(16)->Arg(20)->Arg(24);

static void BM_Tau(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(tau(g));
}
BENCHMARK(BM_Tau)->Arg(16)->Arg(24)->Arg(32)->Arg(40);

static void BM_NicePartition(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_nice_partition(g));
}
BENCHMARK(BM_NicePartition)->Arg(12)->Arg(16)->Arg(20);

static void BM_ParityLinkage(benchmark::State& state) {
  const auto gen = gen_non_parity_linked(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_parity_linkage(gen.graph, gen.system));
}
BENCHMARK(BM_ParityLinkage)->Arg(4)->Arg(6)->Arg(8);

static void BM_OddZPaths(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.3, 3);
  const VertexSet z{0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(odd_z_path_dichotomy(g, z, 2));
}
BENCHMARK(BM_OddZPaths)->Arg(10)->Arg(14)->Arg(18);

static void BM_PackOddSCycles(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.25, 5);
  const VertexSet s{0, 1, 2, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(max_odd_s_cycle_packing(g, s));
}
BENCHMARK(BM_PackOddSCycles)->Arg(10)->Arg(14)->Arg(18);

static void BM_DenseConnectivity(benchmark::State& state) {
  const Graph g = sample_random({Family::random_dense, static_cast<int>(state.range(0)), 0.05, 1, 0, 0, 0, {}});
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_DenseConnectivity)->Arg(32)->Arg(64);

static void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_codes(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
