#pragma once

#include <string_view>

#include "diamag/core/types.hpp"

namespace diamag::kernel {

enum class RegimeTag {
  DirectClosedForm,
  SmallqStaticSeries,
  PvStatic,
  LargeSAsymptotic,
};

std::string_view to_string(RegimeTag tag) noexcept;

struct KernelSettings {
  // Large-|s| expansion is used when |s| > large_s_threshold and also
  // |s| > 2 (1 + q/2), which keeps the double series geometrically convergent.
  double large_s_threshold = 4.0;
  // Taylor expansion in q about fixed s is used when q < smallq_max_q and
  // q/2 < smallq_pole_ratio * dist(s, {-1, +1}).
  double smallq_max_q = 0.05;
  double smallq_pole_ratio = 0.25;

  void validate() const;
};

// Deterministic in (x, y, q). Priority: pv-static, large-|s|, small-q, direct.
// Boundaries are strict, so a point sitting on a threshold goes to the next
// candidate in that order.
RegimeTag regime_select(const DimensionlessPoint& point,
                        const KernelSettings& settings = {});

}  // namespace diamag::kernel
