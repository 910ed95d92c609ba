#pragma once

#include <vector>

namespace diamag::oracle {

struct QuadratureSettings {
  double abs_tol = 1e-15;
  double rel_tol = 1e-13;
  int max_subdivisions = 2000;
  // Nascent-delta widths in units of E_F, strictly decreasing.
  std::vector<double> delta_widths{1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  // Polynomial degree in width^2 used for the width -> 0 extrapolation.
  int extrapolation_order = 3;

  // Throws ValidationError naming the offending field.
  void validate() const;
};

}  // namespace diamag::oracle
