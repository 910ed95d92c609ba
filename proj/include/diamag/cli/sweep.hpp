#pragma once

#include <string_view>
#include <vector>

#include "diamag/kernel/grid.hpp"

namespace diamag::cli {

enum class Axis { Q, X, Y };
enum class Spacing { Log, Linear };

Axis parse_axis(std::string_view name);
Spacing parse_spacing(std::string_view name);
std::string_view to_string(Axis axis) noexcept;

struct SweepSpec {
  Axis axis = Axis::Q;
  double min = 1e-6;
  double max = 2.0;
  int points = 200;
  Spacing spacing = Spacing::Log;
  // The swept coordinate's entry is ignored.
  double x = 0.0;
  double y = 1e-4;
  double q = 1.0;

  // Also checks every generated point against the DimensionlessPoint rules.
  void validate() const;
  // Ascending along the axis; the end points are exactly min and max.
  std::vector<kernel::GridPoint> generate() const;
};

}  // namespace diamag::cli
