#include "diamag/core/units.hpp"

#include <cmath>

#include "diamag/core/constants.hpp"
#include "diamag/core/error.hpp"

namespace diamag {

namespace {

void require_finite(std::string_view field, double value) {
  if (!std::isfinite(value)) {
    throw ValidationError(std::string(field), "must be finite");
  }
}

void require_positive(std::string_view field, double value) {
  require_finite(field, value);
  if (!(value > 0.0)) throw ValidationError(std::string(field), "must be > 0");
}

void require_nonnegative(std::string_view field, double value) {
  require_finite(field, value);
  if (value < 0.0) throw ValidationError(std::string(field), "must be >= 0");
}

bool outside_unit_interval(double t) { return t < -1.0 || t > 1.0; }

}  // namespace

DimensionlessPoint DimensionlessPoint::make(double x, double y, double q) {
  require_nonnegative("x", x);
  require_nonnegative("y", y);
  require_positive("q", q);
  if (y == 0.0 && x > 0.0) {
    const double s = x / q;
    const double a = 0.5 * q;
    if (!(outside_unit_interval(s) && outside_unit_interval(s - a) &&
          outside_unit_interval(s + a))) {
      throw ValidationError(
          "y", "y = 0 with x > 0 puts a real pole inside [-1, 1] "
               "(collisionless damping line); use y > 0");
    }
  }
  // Canonicalise -0.0 so that x == 0 paths produce bitwise zeros.
  return DimensionlessPoint(x + 0.0, y + 0.0, q);
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::ClosedForm: return "closed-form";
    case Method::SeriesSmallQ: return "series-small-q";
    case Method::PvStatic: return "pv-static";
    case Method::Quadrature: return "quadrature";
  }
  return "unknown";
}

void PhysicalState::validate() const {
  require_positive("v_F", v_fermi);
  require_nonnegative("nu", nu);
  require_nonnegative("omega", omega);
  require_positive("k", k);
}

double fermi_wavenumber(double v_fermi) {
  require_positive("v_F", v_fermi);
  return cgs::kElectronMass * v_fermi / cgs::kHbar;
}

DimensionlessPoint to_dimensionless(const PhysicalState& state) {
  state.validate();
  const double k_fermi = fermi_wavenumber(state.v_fermi);
  const double scale = k_fermi * state.v_fermi;
  return DimensionlessPoint::make(state.omega / scale, state.nu / scale,
                                  state.k / k_fermi);
}

PhysicalState from_dimensionless(const DimensionlessPoint& point, double v_fermi) {
  const double k_fermi = fermi_wavenumber(v_fermi);
  const double scale = k_fermi * v_fermi;
  return {v_fermi, point.y() * scale, point.x() * scale, point.q() * k_fermi};
}

FermiParameters fermi_parameters_from_density(double n_e) {
  require_positive("n_e", n_e);
  const double k_fermi = std::cbrt(3.0 * cgs::kPi * cgs::kPi * n_e);
  const double v_fermi = cgs::kHbar * k_fermi / cgs::kElectronMass;
  const double p_fermi = cgs::kHbar * k_fermi;
  return {k_fermi, v_fermi, p_fermi, 0.5 * p_fermi * v_fermi};
}

double landau_chi_physical(double v_fermi) {
  require_positive("v_F", v_fermi);
  using namespace cgs;
  const double e2 = kElementaryCharge * kElementaryCharge;
  return -e2 * v_fermi / (12.0 * kPi * kPi * kHbar * kSpeedOfLight * kSpeedOfLight);
}

double landau_chi_textbook(double v_fermi) {
  require_positive("v_F", v_fermi);
  using namespace cgs;
  const double magneton = kElementaryCharge * kHbar / (2.0 * kElectronMass * kSpeedOfLight);
  const double p_fermi = kElectronMass * v_fermi;
  const double density_of_states =
      p_fermi * kElectronMass / (kPi * kPi * kHbar * kHbar * kHbar);
  return -magneton * magneton * density_of_states / 3.0;
}

Complex chi_ratio_to_absolute(Complex ratio, double v_fermi) {
  // + 0 turns the -0 from a negative scale back into +0.
  return ratio * landau_chi_physical(v_fermi) + Complex(0.0, 0.0);
}

}  // namespace diamag
