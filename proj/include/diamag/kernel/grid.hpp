#pragma once

#include <span>
#include <string>
#include <vector>

#include "diamag/kernel/chi.hpp"

namespace diamag::kernel {

struct GridPoint {
  double x;
  double y;
  double q;
};

struct GridOutcome {
  bool ok = false;
  ChiResult result{};
  RegimeTag regime = RegimeTag::DirectClosedForm;
  std::string error;
};

// Reference implementation; one point after another.
std::vector<GridOutcome> evaluate_grid_serial(std::span<const GridPoint> points,
                                              const KernelSettings& settings = {});

// OpenMP version. Output order matches input order and every entry is
// bitwise identical to the serial result.
std::vector<GridOutcome> evaluate_grid_parallel(std::span<const GridPoint> points,
                                                const KernelSettings& settings = {});

}  // namespace diamag::kernel
