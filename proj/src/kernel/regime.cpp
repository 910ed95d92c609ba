#include "diamag/kernel/regime.hpp"

#include <algorithm>
#include <cmath>

#include "diamag/core/error.hpp"

namespace diamag::kernel {

std::string_view to_string(RegimeTag tag) noexcept {
  switch (tag) {
    case RegimeTag::DirectClosedForm: return "direct-closed-form";
    case RegimeTag::SmallqStaticSeries: return "smallq-static-series";
    case RegimeTag::PvStatic: return "pv-static";
    case RegimeTag::LargeSAsymptotic: return "largeS-asymptotic";
  }
  return "unknown";
}

void KernelSettings::validate() const {
  if (!std::isfinite(large_s_threshold) || large_s_threshold <= 0.0) {
    throw ValidationError("large_s_threshold", "must be finite and > 0");
  }
  if (!std::isfinite(smallq_max_q) || smallq_max_q < 0.0) {
    throw ValidationError("smallq_max_q", "must be finite and >= 0");
  }
  if (!(smallq_pole_ratio > 0.0 && smallq_pole_ratio < 1.0)) {
    throw ValidationError("smallq_pole_ratio", "must lie in (0, 1)");
  }
}

RegimeTag regime_select(const DimensionlessPoint& point, const KernelSettings& settings) {
  if (point.x() == 0.0 && point.y() == 0.0) return RegimeTag::PvStatic;

  const Complex s = point.s();
  const double a = 0.5 * point.q();
  const double abs_s = std::abs(s);
  if (abs_s > settings.large_s_threshold && abs_s > 2.0 * (1.0 + a)) {
    return RegimeTag::LargeSAsymptotic;
  }

  const double pole_distance = std::min(std::abs(s - 1.0), std::abs(s + 1.0));
  if (point.q() < settings.smallq_max_q && a < settings.smallq_pole_ratio * pole_distance) {
    return RegimeTag::SmallqStaticSeries;
  }
  return RegimeTag::DirectClosedForm;
}

}  // namespace diamag::kernel
