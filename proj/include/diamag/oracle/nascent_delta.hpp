#pragma once

#include <vector>

#include "diamag/oracle/settings.hpp"

namespace diamag::oracle {

// Unit-mass Gaussian of standard deviation `width` and its derivatives.
struct NascentDelta {
  double width;

  double value(double arg) const;
  double first_derivative(double arg) const;
  double second_derivative(double arg) const;
};

// Units m = v_F = 1, so E = v^2 / 2 and E_F = 1/2. Widths are in units of E_F.
//   J1 = (4 pi / 15) int_0^inf v^6 delta''(E_F - E) dv
//   J2 = (4 pi / 3)  int_0^inf v^4 delta'(E_F - E) dv
double j1_at_width(double width, const QuadratureSettings& settings = {});
double j2_at_width(double width, const QuadratureSettings& settings = {});

struct JIntegrals {
  double j1;
  double j2;
  double j1_error;  // |difference| between the top two extrapolation orders
  double j2_error;
  std::vector<double> j1_sequence;  // one value per delta width
  std::vector<double> j2_sequence;
};

// Evaluates J1 and J2 at every delta width and extrapolates width -> 0 by a
// polynomial in width^2. Requires the widths to span at least three decades;
// throws ExtrapolationError if the sequences do not converge monotonically.
JIntegrals j_integrals_nascent_delta(const QuadratureSettings& settings = {});

}  // namespace diamag::oracle
