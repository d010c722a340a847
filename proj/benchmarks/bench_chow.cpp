#include <benchmark/benchmark.h>

#include "chowkit/chow.hpp"
#include "chowkit/correspondence.hpp"
#include "chowkit/f4.hpp"

using namespace chowkit;

namespace {

std::shared_ptr<const WeylGroup> f4_group() {
  static const auto g = std::make_shared<const WeylGroup>(named_root_system("F4"));
  return g;
}

const f4::Rings& rings() {
  static const f4::Rings r = f4::build_labeled_rings(1);
  return r;
}

}  // namespace

// Lifts are cached per ring, so each iteration gets a fresh one.
static void BM_GiambelliLifts(benchmark::State& state) {
  const auto theta = ParabolicSubset::omitting(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const ChowRing ring(f4_group(), theta);
    for (int k = 0; k < ring.size(); ++k) benchmark::DoNotOptimize(ring.giambelli_lift(k));
  }
}
BENCHMARK(BM_GiambelliLifts)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_PrecomputeProducts(benchmark::State& state) {
  const auto theta = ParabolicSubset::omitting(4, 0);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ChowRing ring(f4_group(), theta);
    ring.precompute(jobs);
  }
}
BENCHMARK(BM_PrecomputeProducts)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_CachedProduct(benchmark::State& state) {
  const auto& x = *rings().x1;
  const ChowElement a = x.parse("h1^4 + h2^4");
  const ChowElement b = x.parse("h1^7 - 2h2^7");
  for (auto _ : state) benchmark::DoNotOptimize(x.multiply(a, b));
}
BENCHMARK(BM_CachedProduct);

static void BM_Compose(benchmark::State& state) {
  const auto& r = rings();
  const Correspondence J = f4::build_J(r, 1);
  const Correspondence Jt = transpose(J);
  for (auto _ : state) benchmark::DoNotOptimize(compose(Jt, J));
}
BENCHMARK(BM_Compose)->Unit(benchmark::kMicrosecond);

static void BM_ComposeDiagonal(benchmark::State& state) {
  const auto& r = rings();
  const Correspondence d = diagonal(r.x1);
  for (auto _ : state) benchmark::DoNotOptimize(compose(d, d));
}
BENCHMARK(BM_ComposeDiagonal)->Unit(benchmark::kMicrosecond);
