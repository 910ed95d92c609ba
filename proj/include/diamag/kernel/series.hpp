#pragma once

#include "diamag/core/types.hpp"
#include "diamag/kernel/closed_form.hpp"
#include "diamag/kernel/regime.hpp"

namespace diamag::kernel {

struct SeriesValue {
  Complex value;
  double truncation_bound;
  int terms;
};

// term2 + term3 expanded in q at fixed s:
//   (3/16) sum_{m odd >= 3} g_m(s) (q/2)^(m-3),
// g_m the Taylor coefficients of G about s. The 1/q^2 pieces of term2 and
// term3 cancel identically (integration by parts), so no cancellation is left.
// Requires q/2 < dist(s, {-1, +1}); throws DomainError otherwise.
SeriesValue quant_series_small_q(Complex s, double q);

// term2 + term3 expanded in 1/s with the leading orders cancelled term by
// term:
//   (3/16) sum_{n>=2} s^(-2n) sum_{j=1}^{n-1} a^(2j-2) C(2n-1, 2j+1) N_{2(n-1-j)},
// a = q/2 and N_k the moments of (1 - t^2)^2. Requires |s| > 1 + q/2.
// At x = 0 the leading term is q^4 / (5 y^4).
SeriesValue quant_series_large_s(Complex s, double q);

// term1 from its 1/s expansion.
SeriesValue classic_series_large_s(Complex z, double q);

// Term breakdown from the 1/s expansions of each integral. Used where the
// closed forms lose digits; the individual terms are still large when the
// total is small.
TermBreakdown asymptotic_integrals(Complex z, double q);

// Evaluates a point in one of the two series regimes chosen by regime_select.
// Throws DomainError when regime_select picks a non-series regime.
ChiResult chi_series_small_q(const DimensionlessPoint& point,
                             const KernelSettings& settings = {});

}  // namespace diamag::kernel
