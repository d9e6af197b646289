#include <benchmark/benchmark.h>

#include "semidyn/semidyn.hpp"

using namespace semidyn;

namespace {

SemigroupSpec squares() {
  return SemigroupSpec({MapDescriptor::power(2, 1.0), MapDescriptor::power(2, 2.0)}, "squares");
}

GridSpec window(double half, int size) { return {-half, half, -half, half, size, size}; }

void BM_ClassifyOrbit(benchmark::State& state) {
  const SemigroupSpec spec = squares();
  const EscapeParams p;
  const Word w{0, 1, 1};
  Complex z{0.3, 1.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_orbit(spec, w, z, p));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_ClassifyOrbit);

void BM_EscapingSet(benchmark::State& state) {
  const SemigroupSpec spec({MapDescriptor::sine_affine(0.5, 0.0, 1),
                            MapDescriptor::sine_affine(0.5, 6.283185307179586, 1)},
                          "sine");
  const GridSpec g = window(8.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(approximate_escaping_set(spec, g, {}, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.pixel_count()));
}
BENCHMARK(BM_EscapingSet)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_JuliaUnion(benchmark::State& state) {
  const SemigroupSpec spec = squares();
  const GridSpec g = window(3.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(approximate_julia_union(spec, g, {}, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.pixel_count()));
}
BENCHMARK(BM_JuliaUnion)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_BackwardIfs(benchmark::State& state) {
  const SemigroupSpec spec = squares();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(backward_ifs_sample(spec, n, 100, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BackwardIfs)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
