#include <benchmark/benchmark.h>

#include "chowkit/f4.hpp"

using namespace chowkit;

static void BM_BuildLabeledRings(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f4::build_labeled_rings(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildLabeledRings)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime()->Iterations(3);

static void BM_FullPipeline(benchmark::State& state) {
  f4::PipelineOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto report = f4::run_pipeline(options);
    if (!report.all_passed()) state.SkipWithError("pipeline reported failures");
  }
}
BENCHMARK(BM_FullPipeline)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime()->Iterations(1);
