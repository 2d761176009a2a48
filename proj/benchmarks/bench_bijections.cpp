#include <benchmark/benchmark.h>

#include "vlab/chain.hpp"
#include "vlab/dyck.hpp"
#include "vlab/stirges.hpp"

namespace {

const vlab::Permutation& working_example() {
  static const vlab::Permutation p({23, 4, 21, 6, 25, 24, 14, 22, 18, 20, 16, 13, 11, 19, 7, 5, 2, 8, 17, 12, 10, 1, 15, 3,
                                    9});
  return p;
}

void BM_PermToTreeWorkingExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vlab::perm_to_tree(working_example()));
}
BENCHMARK(BM_PermToTreeWorkingExample)->Unit(benchmark::kMicrosecond);

void BM_TreeToPermWorkingExample(benchmark::State& state) {
  const auto t = vlab::perm_to_tree(working_example());
  for (auto _ : state) benchmark::DoNotOptimize(vlab::tree_to_perm(t));
}
BENCHMARK(BM_TreeToPermWorkingExample)->Unit(benchmark::kMicrosecond);

void BM_ChainAllAvoiders(benchmark::State& state) {
  const auto avoiders = vlab::enumerate_avoiders(state.range(0), vlab::pattern_1_23_4());
  for (auto _ : state) {
    for (const auto& p : avoiders) benchmark::DoNotOptimize(vlab::perm_to_tree(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(avoiders.size()));
}
BENCHMARK(BM_ChainAllAvoiders)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Phi(benchmark::State& state) {
  const auto gessel = vlab::enumerate_multiset(state.range(0), vlab::Flavor::gessel);
  for (auto _ : state) {
    for (const auto& g : gessel) benchmark::DoNotOptimize(vlab::phi_direct(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gessel.size()));
}
BENCHMARK(BM_Phi)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_PathCodeRoundTrip(benchmark::State& state) {
  const auto paths = vlab::enumerate_paths(state.range(0));
  for (auto _ : state) {
    for (const auto& p : paths) benchmark::DoNotOptimize(vlab::path_from_code(vlab::path_code(p)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(paths.size()));
}
BENCHMARK(BM_PathCodeRoundTrip)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
