#pragma once

#include <optional>

#include "diamag/core/types.hpp"
#include "diamag/kernel/closed_form.hpp"
#include "diamag/kernel/regime.hpp"

namespace diamag::kernel {

struct Evaluation {
  ChiResult result;
  RegimeTag regime;
  // Absent only where an integral has a pole on an endpoint (static q = 2).
  std::optional<TermBreakdown> terms;
};

// chi / chi_L at a point, split into the classical term (prefactor x) and
// the quantum remainder. classic is exactly zero at x = 0.
Evaluation evaluate(const DimensionlessPoint& point, const KernelSettings& settings = {});

ChiResult chi_ratio(const DimensionlessPoint& point, const KernelSettings& settings = {});

// Negative frequencies via chi(-x, y, q) = conj(chi(x, y, q)).
ChiResult chi_ratio_signed(double x, double y, double q,
                           const KernelSettings& settings = {});

}  // namespace diamag::kernel
