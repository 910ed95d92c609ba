#pragma once

#include <vector>

#include "diamag/core/types.hpp"
#include "diamag/oracle/settings.hpp"

namespace diamag::oracle {

// The transverse-conductivity integrand reduced to the velocity component
// u = v_x / v_F along k, in units of the Fermi sphere. The v_y^2 weight has
// been integrated over the azimuth, leaving a factor rho^2 / 2 per shell of
// transverse radius rho, and pi is factored out.
struct KineticIntegrand {
  double x;
  double y;
  double q;

  // Occupation difference of the two Fermi spheres displaced by +-q/2:
  //   [(1 - (u - q/2)^2)_+^2 - (1 - (u + q/2)^2)_+^2] / 4.
  // Odd in u and zero for |u| > 1 + q/2.
  double occupation_difference(double u) const;

  // Fermi-surface shell delta(1 - w^2) after the rho integration: (1 - u^2)_+ / 2.
  double shell_weight(double u) const;

  // occupation_difference(u) - 2 q u shell_weight(u), the part of the
  // numerator that vanishes with hbar. For |u| < 1 - q/2 the leading terms
  // cancel exactly and it equals -q u (q/2)^2.
  double quantum_weight(double u) const;

  // Collision denominator y - i x + i q u.
  Complex denominator(double u) const;

  // Points where the integrand has kinks: +-1 and +-1 +- q/2.
  std::vector<double> kinks() const;
};

// chi / chi_L from the kinetic formula for the transverse conductivity and
// chi = (i omega / c^2 k^2) sigma_tr. The 1/omega in front of the conductivity
// is cancelled symbolically, so x = 0 is evaluable; classic is then exactly 0.
// Requires y > 0.
ChiResult chi_from_kinetic(const DimensionlessPoint& point,
                           const QuadratureSettings& settings = {});

}  // namespace diamag::oracle
