// Serial reference vs OpenMP grid evaluation on a figure1-style q grid.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <cmath>
#include <vector>

#include "diamag/kernel/grid.hpp"

namespace {

std::vector<diamag::kernel::GridPoint> make_grid(int per_curve) {
  std::vector<diamag::kernel::GridPoint> pts;
  for (double y : {1e-6, 1e-5, 1e-4, 1e-3, 1e-2}) {
    for (double x : {0.0, 0.1, 0.5}) {
      for (int i = 0; i < per_curve; ++i) {
        const double t = static_cast<double>(i) / (per_curve - 1);
        pts.push_back({x, y, std::pow(10.0, -7.0 + t * (std::log10(2.0) + 7.0))});
      }
    }
  }
  return pts;
}

void BM_GridSerial(benchmark::State& state) {
  const auto pts = make_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = diamag::kernel::evaluate_grid_serial(pts);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
}

void BM_GridParallel(benchmark::State& state) {
  const auto pts = make_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = diamag::kernel::evaluate_grid_parallel(pts);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pts.size()));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridParallel)->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
