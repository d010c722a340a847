#include <benchmark/benchmark.h>

#include "chowkit/hasse.hpp"
#include "chowkit/weyl.hpp"

using namespace chowkit;

static void BM_EnumerateWeylGroup(benchmark::State& state) {
  const char* types[] = {"B3", "D4", "F4"};
  const auto sys = named_root_system(types[state.range(0)]);
  for (auto _ : state) {
    WeylGroup g(sys);
    benchmark::DoNotOptimize(g.order());
  }
  state.SetLabel(types[state.range(0)]);
}
BENCHMARK(BM_EnumerateWeylGroup)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_MinimalCosetReps(benchmark::State& state) {
  const WeylGroup g(named_root_system("F4"));
  const auto theta = ParabolicSubset::omitting(4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(g.minimal_reps(theta));
}
BENCHMARK(BM_MinimalCosetReps);

static void BM_ReducedWords(benchmark::State& state) {
  const WeylGroup g(named_root_system("F4"));
  for (auto _ : state) {
    for (ElementId id = 0; id < g.order(); ++id) benchmark::DoNotOptimize(reduced_word(g.element(id)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.order()));
}
BENCHMARK(BM_ReducedWords)->Unit(benchmark::kMillisecond);

static void BM_BuildHasse(benchmark::State& state) {
  const auto g = std::make_shared<const WeylGroup>(named_root_system("F4"));
  const auto theta = ParabolicSubset::omitting(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_hasse(g, theta));
}
BENCHMARK(BM_BuildHasse)->Arg(0)->Arg(3);
