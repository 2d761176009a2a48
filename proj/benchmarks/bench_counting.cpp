#include <benchmark/benchmark.h>

#include "vlab/config.hpp"
#include "vlab/dyck.hpp"
#include "vlab/perm.hpp"
#include "vlab/rec.hpp"
#include "vlab/tree.hpp"

namespace {

void BM_Triangle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vlab::u_triangle(state.range(0)));
}
BENCHMARK(BM_Triangle)->Arg(20)->Arg(60)->Arg(120);

void BM_StatTensor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vlab::stat_tensor(state.range(0)));
}
BENCHMARK(BM_StatTensor)->Arg(8)->Arg(16);

void BM_CountAvoidersBrute(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vlab::count_avoiders(state.range(0), vlab::pattern_1_23_4()));
}
BENCHMARK(BM_CountAvoidersBrute)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_CountIncreasingLeafTrees(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t count = 0;
    vlab::for_each_tree(state.range(0), [&](const vlab::IncOrderedTree& t) { count += vlab::has_increasing_leaves(t); });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CountIncreasingLeafTrees)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_CountPaths(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t count = 0;
    vlab::for_each_path(state.range(0), [&](const vlab::VMDyckPath&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CountPaths)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_EnumerateConfigFamily(benchmark::State& state) {
  const auto filter = vlab::family_properties(vlab::ConfigFamily::W);
  for (auto _ : state) benchmark::DoNotOptimize(vlab::enumerate_configs(static_cast<int>(state.range(0)), filter));
}
BENCHMARK(BM_EnumerateConfigFamily)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
