#include "diamag/oracle/nascent_delta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "diamag/core/error.hpp"
#include "diamag/oracle/quadrature.hpp"

namespace diamag::oracle {

double NascentDelta::value(double arg) const {
  const double t = arg / width;
  return std::exp(-0.5 * t * t) / (width * std::sqrt(2.0 * std::numbers::pi));
}

double NascentDelta::first_derivative(double arg) const {
  return -arg / (width * width) * value(arg);
}

double NascentDelta::second_derivative(double arg) const {
  const double w2 = width * width;
  return (arg * arg / (w2 * w2) - 1.0 / w2) * value(arg);
}

namespace {

constexpr double kEnergyFermi = 0.5;
// Gaussian tails beyond this many widths are below double precision.
constexpr double kCutoff = 40.0;

// int_0^inf g(v) h(E_F - v^2/2) dv = int_{-inf}^{E_F} g(v) / v h(X) dX with
// v = sqrt(1 - 2 X). Integrating in X keeps the integrand smooth on the
// scale of the width; f receives (X, v).
double integrate_on_shell(double width, const QuadratureSettings& settings,
                          const std::function<double(double, double)>& f) {
  const double lo = -kCutoff * width;
  const double hi = std::min(kEnergyFermi, kCutoff * width);
  std::vector<double> breaks{0.0};
  for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    breaks.push_back(-k * width);
    breaks.push_back(k * width);
  }
  return integrate_real_adaptive([&](double x) { return f(x, std::sqrt(1.0 - 2.0 * x)); }, lo,
                                 hi, settings, breaks)
      .value;
}

double check_width(double width_ef) {
  if (!std::isfinite(width_ef) || !(width_ef > 0.0)) {
    throw ValidationError("delta_widths", "width must be finite and > 0");
  }
  return width_ef * kEnergyFermi;
}

// Neville interpolation of (h_i, f_i) evaluated at h = 0.
double neville_at_zero(std::span<const double> h, std::span<const double> f) {
  std::vector<double> p(f.begin(), f.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
    }
  }
  return p[0];
}

void check_monotone(const std::vector<double>& seq, const char* name) {
  const double noise = 1e-12 * std::abs(seq.back());
  double prev = 0.0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const double d = seq[i] - seq[i - 1];
    if (std::abs(d) <= noise) continue;
    if (prev != 0.0 && (d * prev < 0.0 || std::abs(d) > std::abs(prev))) {
      throw ExtrapolationError(std::string(name) +
                               " sequence does not converge monotonically as the width shrinks");
    }
    prev = d;
  }
}

struct Extrapolated {
  double value;
  double error;
};

Extrapolated extrapolate(const std::vector<double>& widths, const std::vector<double>& seq,
                         int order) {
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  const std::size_t first = seq.size() - n;
  std::vector<double> h;
  for (std::size_t i = first; i < seq.size(); ++i) h.push_back(widths[i] * widths[i]);
  const std::span<const double> fs(seq.data() + first, n);
  const double top = neville_at_zero(h, fs);
  const double below = neville_at_zero(std::span<const double>(h).subspan(1), fs.subspan(1));
  return {top, std::abs(top - below)};
}

}  // namespace

double j1_at_width(double width, const QuadratureSettings& settings) {
  const NascentDelta d{check_width(width)};
  const double integral = integrate_on_shell(d.width, settings, [&](double x, double v) {
    const double v2 = v * v;
    return v2 * v2 * v * d.second_derivative(x);
  });
  return 4.0 * std::numbers::pi / 15.0 * integral;
}

double j2_at_width(double width, const QuadratureSettings& settings) {
  const NascentDelta d{check_width(width)};
  const double integral = integrate_on_shell(d.width, settings, [&](double x, double v) {
    return v * v * v * d.first_derivative(x);
  });
  return 4.0 * std::numbers::pi / 3.0 * integral;
}

JIntegrals j_integrals_nascent_delta(const QuadratureSettings& settings) {
  settings.validate();
  const auto& widths = settings.delta_widths;
  if (widths.front() / widths.back() < 1e3 * (1.0 - 1e-12)) {
    throw ValidationError("delta_widths", "widths must span at least three decades");
  }
  JIntegrals out{};
  for (double w : widths) {
    out.j1_sequence.push_back(j1_at_width(w, settings));
    out.j2_sequence.push_back(j2_at_width(w, settings));
  }
  check_monotone(out.j1_sequence, "J1");
  check_monotone(out.j2_sequence, "J2");
  const auto e1 = extrapolate(widths, out.j1_sequence, settings.extrapolation_order);
  const auto e2 = extrapolate(widths, out.j2_sequence, settings.extrapolation_order);
  out.j1 = e1.value;
  out.j2 = e2.value;
  out.j1_error = e1.error;
  out.j2_error = e2.error;
  return out;
}

}  // namespace diamag::oracle
