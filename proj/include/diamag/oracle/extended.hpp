#pragma once

#include "diamag/core/types.hpp"

namespace diamag::oracle {

struct ExtendedChi {
  Complex classic;
  Complex quant;
  Complex total;
  // Summed quadrature error estimates, propagated through the weights.
  double error_estimate;
};

// The t-integrals evaluated and combined in 113-bit binary floating point,
// for points where term2 and term3 are many orders of magnitude larger than
// their sum (q << y). Requires Im(z) > 0.
ExtendedChi chi_ratio_extended(Complex z, double q);

}  // namespace diamag::oracle
