#pragma once

#include "diamag/core/types.hpp"
#include "diamag/oracle/settings.hpp"

namespace diamag::oracle {

// chi_quant / chi_L in the small-k form, where the occupation step has been
// expanded to third order in k and leaves delta' and delta'' of the energy
// on the Fermi surface. The radial integrals against delta' and delta'' are
// done analytically; the remaining angular integral is adaptive quadrature.
//
// At x = y = 0 the static collisionless path is taken and the result is the
// Landau value 1, independent of q. Otherwise y > 0 is required.
Complex chi_quant_smallk(const DimensionlessPoint& point,
                         const QuadratureSettings& settings = {});

}  // namespace diamag::oracle
