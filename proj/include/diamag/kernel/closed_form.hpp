#pragma once

#include "diamag/core/types.hpp"

namespace diamag::kernel {

// The three t-integrals of the susceptibility ratio and their weighted terms:
//   i1 = int (1 - t^2) / (q t - z) dt
//   i2 = int t (1 - t^2) / (q t - z) dt
//   i3 = int (1 - t^2)^2 / ((q t - z)^2 - q^4 / 4) dt
//   term1 = -(3 x / q^2) i1,  term2 = (3 / q) i2,  term3 = (3 / 4) i3
// all over t in [-1, 1]. chi / chi_L = term1 + term2 + term3.
struct TermBreakdown {
  Complex i1;
  Complex i2;
  Complex i3;
  Complex term1;
  Complex term2;
  Complex term3;
};

// Antiderivative-based closed forms with s = z / q:
//   i1 = [-2 s + (1 - s^2) L(s)] / q
//   i2 = [4/3 - 2 s^2 + s (1 - s^2) L(s)] / q
//   i3 = [G(s + q/2) - G(s - q/2)] / q^3,  G(w) = 2 w^3 - 10 w / 3 + (1 - w^2)^2 L(w)
// Im(z) = 0 is read as the limit from above. Throws PoleError when a pole
// sits on an endpoint t = +-1.
TermBreakdown eval_integrals(Complex z, double q);

// term2 + term3, assembled from their algebraic pieces with compensated
// summation. The O(1/q^2) parts cancel analytically, so this loses about
// log10(4/q^2) digits; regime_select keeps small q away from it.
Complex quant_closed_form(Complex z, double q);

// The ratio on the static collisionless line (x = 0, y -> 0+), where the
// i pi parts of the two poles at t = +-q/2 cancel:
//   4/q^2 + 3/(4 q^2) [2/3 + 2 (a^2 - 2) + ((1 - a^2)^2 / a) ln|(1 - a)/(1 + a)|],
// a = q / 2. Accepts any q > 0; for q >= 2 the poles are outside [-1, 1] and
// the same expression is the ordinary integral. Throws DomainError for q <= 0.
double chi_static_pv(double q);

struct StaticValue {
  double value;
  double truncation_bound;  // 0 when the closed expression is used
};

// chi_static_pv with the bound of the small-q series used below q = 0.5:
//   1 - (3/8) sum_{n>=2} d_n a^(2n-2),  d_n = 8 / ((2n-1)((2n-1)^2 - 4)).
StaticValue chi_static_pv_bounded(double q);

}  // namespace diamag::kernel
