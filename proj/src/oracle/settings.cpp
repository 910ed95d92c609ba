#include "diamag/oracle/settings.hpp"

#include <cmath>

#include "diamag/core/error.hpp"

namespace diamag::oracle {

void QuadratureSettings::validate() const {
  if (!std::isfinite(abs_tol) || !(abs_tol > 0.0)) {
    throw ValidationError("abs_tol", "must be finite and > 0");
  }
  if (!std::isfinite(rel_tol) || !(rel_tol > 0.0)) {
    throw ValidationError("rel_tol", "must be finite and > 0");
  }
  if (max_subdivisions < 64) throw ValidationError("max_subdivisions", "must be >= 64");
  if (delta_widths.size() < 2) throw ValidationError("delta_widths", "needs at least two widths");
  for (std::size_t i = 0; i < delta_widths.size(); ++i) {
    if (!std::isfinite(delta_widths[i]) || !(delta_widths[i] > 0.0)) {
      throw ValidationError("delta_widths", "widths must be finite and > 0");
    }
    if (i > 0 && !(delta_widths[i] < delta_widths[i - 1])) {
      throw ValidationError("delta_widths", "widths must be strictly decreasing");
    }
  }
  if (extrapolation_order < 1 ||
      extrapolation_order >= static_cast<int>(delta_widths.size())) {
    throw ValidationError("extrapolation_order", "must be in [1, number of widths - 1]");
  }
}

}  // namespace diamag::oracle
