#pragma once

#include "diamag/core/types.hpp"
#include "diamag/oracle/settings.hpp"

namespace diamag::oracle {

struct TermIntegrals {
  Complex i1, i2, i3;
  double err1 = 0.0, err2 = 0.0, err3 = 0.0;
  int subdivisions = 0;
};

// Direct quadrature of the three t-integrands
//   (1 - t^2)/(q t - z),  t (1 - t^2)/(q t - z),  (1 - t^2)^2/((q t - z)^2 - q^4/4)
// over [-1, 1]. Any z with Im(z) > 0 is accepted, including Re(z) < 0; with
// Im(z) = 0 every pole must lie outside [-1, 1] (DomainError otherwise).
TermIntegrals integrate_terms(Complex z, double q, const QuadratureSettings& settings = {});

// chi / chi_L from integrate_terms, split as the kernel does.
ChiResult chi_ratio_quadrature_at(Complex z, double q, const QuadratureSettings& settings = {});

// Same for a validated point; y = 0 is rejected unless the poles are off [-1, 1].
ChiResult chi_ratio_quadrature(const DimensionlessPoint& point,
                               const QuadratureSettings& settings = {});

}  // namespace diamag::oracle
