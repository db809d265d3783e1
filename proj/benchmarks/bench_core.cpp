#include "mpr/balanced_matrix.hpp"
#include "mpr/feynman.hpp"
#include "mpr/multigraph.hpp"
#include "mpr/special.hpp"
#include "mpr/walk.hpp"
#include "mpr/weights.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SampleClosedWalk(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mpr::sample_walk(mpr::WalkKind::closed, state.range(0), seed++));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_SampleClosedWalk)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void BM_VisitHistogram(benchmark::State& state) {
  const auto w = mpr::sample_walk(mpr::WalkKind::free, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(mpr::visit_histogram(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VisitHistogram)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void BM_WeiPartition(benchmark::State& state) {
  const auto fs = mpr::enumerate_phi4(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& f : fs) benchmark::DoNotOptimize(mpr::wei_partition(f));
  state.counters["matrices"] = static_cast<double>(fs.size());
}
BENCHMARK(BM_WeiPartition)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_EnumerateMF(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mpr::enumerate_mf(static_cast<int>(state.range(0)), 0, 2, 2));
}
BENCHMARK(BM_EnumerateMF)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_GammaAtZero(benchmark::State& state) {
  const auto g = mpr::DirectedMultigraph::from_matrix(mpr::enumerate_phi4(3).front());
  for (auto _ : state) benchmark::DoNotOptimize(mpr::gamma_at_zero(g, state.range(0), 11));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GammaAtZero)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Hyp2F1(benchmark::State& state) {
  const mpr::cplx a{0.5, 0.3}, b{1.5, -0.2}, c{2.25, 0.1};
  double x = -0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mpr::hyp2f1(a, b, c, mpr::cplx{x, 0.1}));
    x = x > 0.9 ? -0.9 : x + 0.01;
  }
}
BENCHMARK(BM_Hyp2F1);

}  // namespace
BENCHMARK_MAIN();
