#include <benchmark/benchmark.h>

#include "excseq/bijection.hpp"
#include "excseq/exceptional.hpp"
#include "excseq/homext.hpp"
#include "excseq/mutation.hpp"
#include "excseq/nc_tree.hpp"
#include "excseq/oracle.hpp"

namespace {

using namespace excseq;

void BM_HomDimClosedForm(benchmark::State& state) {
  const auto modules = indecomposables(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int total = 0;
    for (const Interval& a : modules)
      for (const Interval& b : modules) total += hom_dim(a, b);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(modules.size() * modules.size()));
}
BENCHMARK(BM_HomDimClosedForm)->Arg(4)->Arg(8);

void BM_HomDimOracle(benchmark::State& state) {
  const auto modules = indecomposables(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int total = 0;
    for (const Interval& a : modules)
      for (const Interval& b : modules) total += hom_dim_oracle(a, b);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(modules.size() * modules.size()));
}
BENCHMARK(BM_HomDimOracle)->Arg(4)->Arg(8);

void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nc_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_EnumerateTreesParallel(benchmark::State& state) {
  const int n = 8;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nc_trees(n, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateTreesParallel)->Arg(2)->Arg(4)->Arg(8);

void BM_EnumerateSequences(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_complete_sequences(n));
}
BENCHMARK(BM_EnumerateSequences)->Arg(4)->Arg(5)->Arg(6);

void BM_SequenceFromTree(benchmark::State& state) {
  const auto trees = enumerate_nc_trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const NCTree& tree : trees) benchmark::DoNotOptimize(sequence_from_tree(tree));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_SequenceFromTree)->Arg(5)->Arg(6);

void BM_VerifyBijection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_bijection(n));
}
BENCHMARK(BM_VerifyBijection)->Arg(4)->Arg(5);

void BM_BraidOrbit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Interval> star;
  for (int j = 1; j <= n; ++j) star.emplace_back(n, 0, j);
  const ExceptionalSequence start = sequence_of_modules(n, star);
  const auto generators = braid_generators(n);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_classes(start, generators));
}
BENCHMARK(BM_BraidOrbit)->Arg(4)->Arg(5);

void BM_TreeCountClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nc_tree_count(n));
}
BENCHMARK(BM_TreeCountClosedForm)->Arg(8)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
