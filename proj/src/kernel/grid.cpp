#include "diamag/kernel/grid.hpp"

#include <cstddef>
#include <exception>

namespace diamag::kernel {

namespace {

GridOutcome evaluate_one(const GridPoint& p, const KernelSettings& settings) {
  GridOutcome out;
  try {
    const Evaluation e = evaluate(DimensionlessPoint::make(p.x, p.y, p.q), settings);
    out.ok = true;
    out.result = e.result;
    out.regime = e.regime;
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
  return out;
}

}  // namespace

std::vector<GridOutcome> evaluate_grid_serial(std::span<const GridPoint> points,
                                              const KernelSettings& settings) {
  std::vector<GridOutcome> out;
  out.reserve(points.size());
  for (const GridPoint& p : points) out.push_back(evaluate_one(p, settings));
  return out;
}

std::vector<GridOutcome> evaluate_grid_parallel(std::span<const GridPoint> points,
                                                const KernelSettings& settings) {
  std::vector<GridOutcome> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  // Series regimes cost several times the closed form, hence dynamic.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_one(points[static_cast<std::size_t>(i)], settings);
  }
  return out;
}

}  // namespace diamag::kernel
