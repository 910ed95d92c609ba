#pragma once

#include <functional>
#include <span>

#include "diamag/core/types.hpp"
#include "diamag/oracle/settings.hpp"

namespace diamag::oracle {

template <class V>
struct QuadResult {
  V value;
  double error;
  int subdivisions;
};

// Adaptive Gauss-Kronrod over [a, b]. Extra breakpoints inside (a, b) seed
// the initial partition (callers put them around near-real poles). Throws
// ConvergenceError, carrying the best estimate, when max_subdivisions runs out.
QuadResult<Complex> integrate_complex_adaptive(const std::function<Complex(double)>& f,
                                               double a, double b,
                                               const QuadratureSettings& settings,
                                               std::span<const double> breakpoints = {});

QuadResult<double> integrate_real_adaptive(const std::function<double(double)>& f, double a,
                                           double b, const QuadratureSettings& settings,
                                           std::span<const double> breakpoints = {});

// Breakpoints c, c +- w, c +- 8 w clipped to (lo, hi) for each centre c.
std::vector<double> pole_breakpoints(std::span<const double> centres, double width, double lo,
                                     double hi);

}  // namespace diamag::oracle
