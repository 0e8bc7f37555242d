// Serial reference paths against their OpenMP counterparts.
// Each benchmark takes the thread count as its argument (1 = serial, 0 = OpenMP default).

#include <benchmark/benchmark.h>

#include "tcknot/enumerate.hpp"
#include "tcknot/invariants.hpp"

using namespace tcknot;

namespace {

const TripleProjection& projection(int n) {
  static const std::vector<TripleProjection> ps = [] {
    std::vector<TripleProjection> out;
    for (int k = 2; k <= 4; ++k) out.push_back(enumerate_projections(k).projections.back());
    return out;
  }();
  return ps[static_cast<std::size_t>(n - 2)];
}

void BM_JonesKernel(benchmark::State& state) {
  const JonesKernel kernel(projection(4));
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel.evaluate_all(threads));
  state.SetItemsProcessed(state.iterations() * 1296);
}
BENCHMARK(BM_JonesKernel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

// The per-diagram reference evaluation on the same 6^4 assignments.
void BM_JonesTripleReference(benchmark::State& state) {
  const TripleProjection& p = projection(4);
  for (auto _ : state)
    for (std::uint64_t i = 0; i < 1296; ++i)
      benchmark::DoNotOptimize(jones_triple(TripleDiagram(p, heights_from_index(i, 4))));
  state.SetItemsProcessed(state.iterations() * 1296);
}
BENCHMARK(BM_JonesTripleReference)->Unit(benchmark::kMillisecond);

void BM_EnumerateProjections(benchmark::State& state) {
  EnumerationOptions opt;
  opt.threads = static_cast<int>(state.range(1));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_projections(n, opt));
}
BENCHMARK(BM_EnumerateProjections)->Args({4, 1})->Args({4, 0})->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  std::vector<EnumerationRun> runs;
  for (int k = 2; k <= 3; ++k) runs.push_back(enumerate_projections(k));
  ClassifyOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(runs, opt));
}
BENCHMARK(BM_Classify)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_AlexanderSignature(benchmark::State& state) {
  const DoubleDiagram dd = convert_to_double(TripleDiagram(projection(4), heights_from_index(777, 4)));
  const Orientation o = traversal_orientation(dd);
  for (auto _ : state) benchmark::DoNotOptimize(alexander_signature(dd, o));
}
BENCHMARK(BM_AlexanderSignature);

void BM_AlexanderExact(benchmark::State& state) {
  const DoubleDiagram dd = convert_to_double(TripleDiagram(projection(4), heights_from_index(777, 4)));
  const Orientation o = traversal_orientation(dd);
  for (auto _ : state) benchmark::DoNotOptimize(alexander(dd, o));
}
BENCHMARK(BM_AlexanderExact);

}  // namespace

BENCHMARK_MAIN();
