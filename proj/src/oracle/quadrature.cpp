#include "diamag/oracle/quadrature.hpp"

#include <string>
#include <utility>
#include <vector>

#include "diamag/core/error.hpp"
#include "diamag/oracle/gauss_kronrod.hpp"

namespace diamag::oracle {

namespace {

std::vector<double> initial_breaks(double a, double b, std::span<const double> inner) {
  if (!(a < b)) throw DomainError("integration range must satisfy a < b");
  std::vector<double> breaks{a, b};
  for (double p : inner) {
    if (p > a && p < b) breaks.push_back(p);
  }
  return breaks;
}

template <class V, class F>
QuadResult<V> run(F&& f, double a, double b, const QuadratureSettings& settings,
                  std::span<const double> breakpoints) {
  const auto r = integrate_adaptive<double>(std::forward<F>(f), initial_breaks(a, b, breakpoints),
                                            settings.abs_tol, settings.rel_tol,
                                            settings.max_subdivisions);
  if (!r.converged) {
    throw ConvergenceError("adaptive quadrature stopped after " + std::to_string(r.subdivisions) +
                               " panels with error estimate " + std::to_string(r.error),
                           Complex(r.value), r.error, r.subdivisions);
  }
  return {r.value, r.error, r.subdivisions};
}

}  // namespace

QuadResult<Complex> integrate_complex_adaptive(const std::function<Complex(double)>& f,
                                               double a, double b,
                                               const QuadratureSettings& settings,
                                               std::span<const double> breakpoints) {
  return run<Complex>([&f](double t) { return f(t); }, a, b, settings, breakpoints);
}

QuadResult<double> integrate_real_adaptive(const std::function<double(double)>& f, double a,
                                           double b, const QuadratureSettings& settings,
                                           std::span<const double> breakpoints) {
  return run<double>([&f](double t) { return f(t); }, a, b, settings, breakpoints);
}

std::vector<double> pole_breakpoints(std::span<const double> centres, double width, double lo,
                                     double hi) {
  std::vector<double> out;
  for (double c : centres) {
    for (double offset : {0.0, -width, width, -8.0 * width, 8.0 * width}) {
      const double p = c + offset;
      if (p > lo && p < hi) out.push_back(p);
    }
  }
  return out;
}

}  // namespace diamag::oracle
