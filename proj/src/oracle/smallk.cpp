#include "diamag/oracle/smallk.hpp"

#include "diamag/core/error.hpp"
#include "diamag/oracle/quadrature.hpp"

namespace diamag::oracle {

// With mu the cosine to k and w = mu / (q mu - z), the radial integrals
//   int Phi(r) delta'(1 - r^2) dr  = g'(1) / 2,
//   int Phi(r) delta''(1 - r^2) dr = (g''(1) - g'(1)) / 4,   g = Phi / (2 r),
// leave the angular integrand below. On the static path w = 1/q.
Complex chi_quant_smallk(const DimensionlessPoint& point, const QuadratureSettings& settings) {
  settings.validate();
  const double q = point.q();
  const Complex z = point.z();
  const bool static_path = point.x() == 0.0 && point.y() == 0.0;
  if (!static_path && !(point.y() > 0.0)) {
    throw DomainError("small-k oracle requires y > 0 off the static path");
  }

  auto inner = [&](double mu) {
    const Complex w = static_path ? Complex(1.0 / q) : mu / (q * mu - z);
    const Complex w2 = w * w;
    const Complex bracket = mu * mu * (24.0 * w - 11.0 * q * w2 + 2.0 * q * q * w2 * w) / 4.0 -
                            0.75 * (4.0 * w - q * w2);
    return (1.0 - mu * mu) * bracket;
  };

  std::vector<double> breaks;
  if (!static_path) {
    const Complex s = point.s();
    const double centre[] = {s.real()};
    breaks = pole_breakpoints(centre, s.imag(), -1.0, 1.0);
  }
  const auto r = integrate_complex_adaptive(inner, -1.0, 1.0, settings, breaks);
  return -0.5 * q * r.value;
}

}  // namespace diamag::oracle
