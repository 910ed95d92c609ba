#pragma once

#include "diamag/core/types.hpp"

namespace diamag {

// Plasma parameters in Gaussian units.
struct PhysicalState {
  double v_fermi;  // cm/s
  double nu;       // s^-1
  double omega;    // rad/s
  double k;        // cm^-1

  void validate() const;
};

struct FermiParameters {
  double k_fermi;  // cm^-1
  double v_fermi;  // cm/s
  double p_fermi;  // g cm/s
  double e_fermi;  // erg
};

double fermi_wavenumber(double v_fermi);

DimensionlessPoint to_dimensionless(const PhysicalState& state);
PhysicalState from_dimensionless(const DimensionlessPoint& point, double v_fermi);

// Spin-degenerate free-electron gas: k_F = (3 pi^2 n_e)^(1/3).
FermiParameters fermi_parameters_from_density(double n_e);

// chi_L = -e^2 v_F / (12 pi^2 hbar c^2).
double landau_chi_physical(double v_fermi);

// Same constant written as -(1/3) (e hbar / 2 m c)^2 (p_F m / (pi^2 hbar^3)).
double landau_chi_textbook(double v_fermi);

Complex chi_ratio_to_absolute(Complex ratio, double v_fermi);

}  // namespace diamag
