// Serial reference vs. OpenMP kernels: level-region rasterization and the
// ray-sampling agreement sweep.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "modcone/cone.hpp"
#include "modcone/function.hpp"
#include "modcone/ray_oracle.hpp"
#include "modcone/render.hpp"

namespace {

using modcone::complex;

modcone::ComplexFunction paper_function() {
  const complex omega = std::polar(1.0, std::numbers::pi / 4);
  return modcone::ComplexFunction::rational(modcone::make_polynomial({1.0}),
                                            modcone::make_polynomial({1.0, 0.0, 0.0, -omega}));
}

modcone::RasterWindow window(int px) { return {complex{}, 1.2, 1.2, px, px}; }

void BM_RasterSerial(benchmark::State& state) {
  const auto f = paper_function();
  const auto w = window(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto img = modcone::rasterize_level_region_serial(f, w, modcone::SampleMode::Modulus);
    benchmark::DoNotOptimize(img.pixels.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_RasterParallel(benchmark::State& state) {
  const auto f = paper_function();
  const auto w = window(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto img = modcone::rasterize_level_region(f, w, modcone::SampleMode::Modulus);
    benchmark::DoNotOptimize(img.pixels.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_CompareSerial(benchmark::State& state) {
  const auto s = paper_function().expand(complex{}, 60);
  const auto d = modcone::holomorphic_cone(s);
  modcone::CompareOptions opts;
  opts.angle_count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(modcone::compare_serial(d, s, opts).matches);
}

void BM_CompareParallel(benchmark::State& state) {
  const auto s = paper_function().expand(complex{}, 60);
  const auto d = modcone::holomorphic_cone(s);
  modcone::CompareOptions opts;
  opts.angle_count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(modcone::compare(d, s, opts).matches);
}

}  // namespace

BENCHMARK(BM_RasterSerial)->Arg(300)->Arg(600)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RasterParallel)->Arg(300)->Arg(600)->Arg(1200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CompareSerial)->Arg(360)->Arg(3600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareParallel)->Arg(360)->Arg(3600)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
