#include "diamag/oracle/kinetic.hpp"

#include <cmath>

#include "diamag/core/error.hpp"
#include "diamag/oracle/quadrature.hpp"

namespace diamag::oracle {

namespace {

double positive_part(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace

double KineticIntegrand::occupation_difference(double u) const {
  const double a = 0.5 * q;
  const double lower = positive_part(1.0 - (u - a) * (u - a));
  const double upper = positive_part(1.0 - (u + a) * (u + a));
  return 0.25 * (lower * lower - upper * upper);
}

double KineticIntegrand::shell_weight(double u) const {
  return u > -1.0 && u < 1.0 ? 0.5 * (1.0 - u * u) : 0.0;
}

double KineticIntegrand::quantum_weight(double u) const {
  const double a = 0.5 * q;
  if (std::abs(u) < 1.0 - a) return -q * u * a * a;
  return occupation_difference(u) - 2.0 * q * u * shell_weight(u);
}

Complex KineticIntegrand::denominator(double u) const { return {y, q * u - x}; }

std::vector<double> KineticIntegrand::kinks() const {
  const double a = 0.5 * q;
  return {-1.0, 1.0, -1.0 - a, -1.0 + a, 1.0 - a, 1.0 + a};
}

// sigma_tr reduces to pi * int [occ(u) + 2 (x - q u) shell(u)] / (y - i x + i q u) du
// times constants that, with chi = (i omega / c^2 k^2) sigma_tr and chi_L,
// leave an overall factor -3 i / (pi q^2). The 2 x shell part is the
// classical response; the rest vanishes with hbar.
ChiResult chi_from_kinetic(const DimensionlessPoint& point, const QuadratureSettings& settings) {
  settings.validate();
  if (!(point.y() > 0.0)) throw DomainError("kinetic oracle requires y > 0");
  const KineticIntegrand in{point.x(), point.y(), point.q()};
  const double a = 0.5 * in.q;
  const double lo = -1.0 - a;
  const double hi = 1.0 + a;
  const Complex s = point.s();
  const Complex prefactor(0.0, -3.0 / (in.q * in.q));

  const double centre[] = {s.real()};
  auto breaks = pole_breakpoints(centre, s.imag(), lo, hi);
  for (double k : in.kinks()) breaks.push_back(k);

  const auto quant = integrate_complex_adaptive(
      [&](double u) {
        return in.quantum_weight(u) / in.denominator(u);
      },
      lo, hi, settings, breaks);

  Complex classic{};
  double classic_err = 0.0;
  if (in.x != 0.0) {
    const auto c = integrate_complex_adaptive(
        [&](double u) { return 2.0 * in.x * in.shell_weight(u) / in.denominator(u); }, -1.0,
        1.0, settings, breaks);
    classic = prefactor * c.value;
    classic_err = std::abs(prefactor) * c.error;
  }
  return ChiResult::from_parts(classic, prefactor * quant.value, Method::Quadrature,
                               classic_err + std::abs(prefactor) * quant.error);
}

}  // namespace diamag::oracle
