#include "diamag/oracle/extended.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <string>

#include "diamag/core/error.hpp"
#include "diamag/oracle/gauss_kronrod.hpp"
#include "diamag/oracle/quadrature.hpp"

namespace diamag::oracle {

namespace {

using Real = boost::multiprecision::cpp_bin_float_quad;
using Cplx = boost::multiprecision::cpp_complex_quad;

constexpr int kMaxPanels = 4000;

template <class F>
auto integrate_quad(F&& f, const std::vector<Real>& breaks) {
  const auto r = integrate_adaptive<Real>(std::forward<F>(f), breaks, Real("1e-80"),
                                          Real("1e-28"), kMaxPanels);
  if (!r.converged) {
    throw ConvergenceError("extended-precision quadrature did not converge",
                           Complex(static_cast<double>(real(r.value)),
                                   static_cast<double>(imag(r.value))),
                           static_cast<double>(r.error), r.subdivisions);
  }
  return r;
}

Complex to_double(const Cplx& v) {
  return {static_cast<double>(real(v)), static_cast<double>(imag(v))};
}

}  // namespace

ExtendedChi chi_ratio_extended(Complex z, double q) {
  if (!std::isfinite(q) || !(q > 0.0)) throw DomainError("q must be finite and > 0");
  if (!(z.imag() > 0.0)) throw DomainError("extended quadrature requires Im(z) > 0");

  const Real qq(q);
  const Cplx zz(Real(z.real()), Real(z.imag()));
  const Real half_q2 = qq * qq / 2;

  const Complex s = z / q;
  const double centres[] = {s.real(), s.real() - 0.5 * q, s.real() + 0.5 * q};
  std::vector<Real> breaks{Real(-1), Real(1)};
  for (double p : pole_breakpoints(centres, s.imag(), -1.0, 1.0)) breaks.emplace_back(p);

  const auto r1 = integrate_quad(
      [&](const Real& t) -> Cplx { return Cplx(Real(1 - t * t)) / Cplx(qq * t - zz); }, breaks);
  const auto r2 = integrate_quad(
      [&](const Real& t) -> Cplx { return Cplx(Real(t * (1 - t * t))) / Cplx(qq * t - zz); },
      breaks);
  const auto r3 = integrate_quad(
      [&](const Real& t) -> Cplx {
        const Real w = 1 - t * t;
        const Cplx d = qq * t - zz;
        return Cplx(Real(w * w)) / Cplx((d - half_q2) * (d + half_q2));
      },
      breaks);

  const Real x(z.real());
  const Real w1 = 3 * x / (qq * qq);
  const Real w2 = 3 / qq;
  const Real w3("0.75");
  const Cplx classic = z.real() == 0.0 ? Cplx(Real(0)) : Cplx(-w1 * r1.value);
  const Cplx quant = Cplx(w2 * r2.value) + Cplx(w3 * r3.value);
  const Cplx total = classic + quant;
  const Real err = abs(w1) * r1.error + w2 * r2.error + w3 * r3.error;

  return {to_double(classic), to_double(quant), to_double(total), static_cast<double>(err)};
}

}  // namespace diamag::oracle
