#include "diamag/oracle/quadrature_chi.hpp"

#include <cmath>

#include "diamag/core/error.hpp"
#include "diamag/oracle/quadrature.hpp"

namespace diamag::oracle {

namespace {

bool inside_unit(double t) { return t >= -1.0 && t <= 1.0; }

}  // namespace

TermIntegrals integrate_terms(Complex z, double q, const QuadratureSettings& settings) {
  settings.validate();
  if (!std::isfinite(q) || !(q > 0.0)) throw DomainError("q must be finite and > 0");
  if (!(z.imag() >= 0.0)) throw DomainError("Im(z) must be >= 0");
  const Complex s = z / q;
  const double a = 0.5 * q;
  if (z.imag() == 0.0 &&
      (inside_unit(s.real()) || inside_unit(s.real() - a) || inside_unit(s.real() + a))) {
    throw DomainError("real pole inside [-1, 1]: quadrature needs Im(z) > 0");
  }

  const double centres[] = {s.real(), s.real() - a, s.real() + a};
  const auto breaks = pole_breakpoints(centres, s.imag(), -1.0, 1.0);
  const double half_q2 = 0.5 * q * q;

  const auto r1 = integrate_complex_adaptive(
      [&](double t) { return (1.0 - t * t) / (q * t - z); }, -1.0, 1.0, settings, breaks);
  const auto r2 = integrate_complex_adaptive(
      [&](double t) { return t * (1.0 - t * t) / (q * t - z); }, -1.0, 1.0, settings, breaks);
  const auto r3 = integrate_complex_adaptive(
      [&](double t) {
        const double w = 1.0 - t * t;
        const Complex d = q * t - z;
        return w * w / ((d - half_q2) * (d + half_q2));
      },
      -1.0, 1.0, settings, breaks);

  return {r1.value, r2.value, r3.value, r1.error, r2.error, r3.error,
          r1.subdivisions + r2.subdivisions + r3.subdivisions};
}

ChiResult chi_ratio_quadrature_at(Complex z, double q, const QuadratureSettings& settings) {
  const TermIntegrals t = integrate_terms(z, q, settings);
  const double x = z.real();
  const double w1 = 3.0 * x / (q * q);
  const Complex classic = x == 0.0 ? Complex{} : -w1 * t.i1;
  const Complex quant = (3.0 / q) * t.i2 + 0.75 * t.i3;
  const double err = std::abs(w1) * t.err1 + (3.0 / q) * t.err2 + 0.75 * t.err3;
  return ChiResult::from_parts(classic, quant, Method::Quadrature, err);
}

ChiResult chi_ratio_quadrature(const DimensionlessPoint& point,
                               const QuadratureSettings& settings) {
  if (point.y() == 0.0 && point.x() == 0.0) {
    throw DomainError("static collisionless line has poles on the contour; use chi_static_pv");
  }
  return chi_ratio_quadrature_at(point.z(), point.q(), settings);
}

}  // namespace diamag::oracle
