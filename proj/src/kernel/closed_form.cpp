#include "diamag/kernel/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "diamag/core/error.hpp"
#include "diamag/kernel/branch_log.hpp"
#include "diamag/kernel/series.hpp"

namespace diamag::kernel {

namespace {

constexpr double kIntegralSeriesAbsS = 4.0;

void check_arguments(Complex z, double q) {
  if (!std::isfinite(q) || !(q > 0.0)) throw DomainError("q must be finite and > 0");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("z must be finite");
  }
  if (z.imag() < 0.0) throw DomainError("Im(z) must be >= 0");
}

Complex quartic_weight(Complex w) {
  const Complex one_minus = 1.0 - w * w;
  return one_minus * one_minus;
}

// Integral of (1 - t^2)^2 / (t - w) over [-1, 1].
Complex antiderivative_g(Complex w) {
  return 2.0 * w * w * w - (10.0 / 3.0) * w + quartic_weight(w) * branch_log(w);
}

// Neumaier summation, real and imaginary parts separately.
class CompensatedSum {
 public:
  void add(Complex value) {
    add_part(sum_re_, comp_re_, value.real());
    add_part(sum_im_, comp_im_, value.imag());
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  double sum_re_ = 0.0, comp_re_ = 0.0;
  double sum_im_ = 0.0, comp_im_ = 0.0;
};

// log(1 + w), accurate for small |w|.
Complex log1p_c(Complex w) {
  if (std::abs(w) >= 0.25) return std::log(1.0 + w);
  Complex sum{}, power = w;
  for (int k = 1; k < 60; ++k) {
    const Complex term = power / static_cast<double>(k);
    sum += (k % 2 ? term : -term);
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    power *= w;
  }
  return sum;
}

// log(1 + w) - w.
Complex log1pmx_c(Complex w) {
  if (std::abs(w) >= 0.25) return std::log(1.0 + w) - w;
  Complex sum{}, power = w * w;
  for (int k = 2; k < 60; ++k) {
    const Complex term = power / static_cast<double>(k);
    sum += (k % 2 ? term : -term);
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    power *= w;
  }
  return sum;
}

// term2 + term3 with the O(1/q^3) and O(1/q^2) parts removed analytically.
// Writing P(w) = (1 - w^2)^2, P+- = P(s +- a), L+- = L(s +- a):
//   (L+ + L-)/2 = L(s) + delta,       delta = [log1p(-a^2/(s-1)^2) - log1p(-a^2/(s+1)^2)] / 2
//   (L+ - L-)/2 = 2a/(s^2 - 1) + eps, eps = log1pmx(W)/2 + 2a^2 (2 + a) / ((s^2 - (1+a)^2)(s^2 - 1))
// with W = 4a / (s^2 - (1+a)^2); delta = O(a^2), eps = O(a^3). The branch
// identities need Im(s) > 0 and a well inside dist(s, {-1, +1}).
Complex quant_rearranged(Complex s, double q) {
  const double a = 0.5 * q;
  const double a2 = a * a;
  const Complex s2 = s * s;
  const Complex sm = s - 1.0;
  const Complex sp = s + 1.0;
  const Complex d_outer = s2 - (1.0 + a) * (1.0 + a);
  const Complex d_unit = s2 - 1.0;

  const Complex delta = 0.5 * (log1p_c(-a2 / (sm * sm)) - log1p_c(-a2 / (sp * sp)));
  const Complex w = 4.0 * a / d_outer;
  const Complex eps = 0.5 * log1pmx_c(w) + 2.0 * a2 * (2.0 + a) / (d_outer * d_unit);

  const Complex p_diff = 8.0 * a * s * (s2 + a2 - 1.0);
  const Complex one_minus_s2 = 1.0 - s2;
  const Complex p_sum = 2.0 * one_minus_s2 * one_minus_s2 + a2 * (12.0 * s2 - 4.0) + 2.0 * a2 * a2;

  CompensatedSum sum;
  sum.add(Complex{0.375, 0.0});
  sum.add(0.75 * s * branch_log(s));
  sum.add(0.1875 * (12.0 * s2 - 4.0 + 2.0 * a2) / d_unit);
  sum.add((0.75 / (q * q * q)) * (p_diff * delta + p_sum * eps));
  return sum.value();
}

}  // namespace

TermBreakdown eval_integrals(Complex z, double q) {
  check_arguments(z, q);
  const Complex s = z / q;
  const double a = 0.5 * q;
  // Far from the cut the 1/s expansions converge fast and lose nothing.
  if (std::abs(s) > kIntegralSeriesAbsS && std::abs(s) > 2.0 * (1.0 + a)) {
    return asymptotic_integrals(z, q);
  }
  const Complex log_s = branch_log(s);
  const Complex one_minus_s2 = 1.0 - s * s;

  TermBreakdown out;
  out.i1 = (-2.0 * s + one_minus_s2 * log_s) / q;
  out.i2 = (4.0 / 3.0 - 2.0 * s * s + s * one_minus_s2 * log_s) / q;
  const double dist = std::min(std::abs(s - 1.0), std::abs(s + 1.0));
  if (z.imag() > 0.0 && a <= 0.5 * dist) {
    // The G difference loses about 1/q^3 digits; take I3 from the cancelled sum instead.
    out.i3 = (quant_rearranged(s, q) - (3.0 / q) * out.i2) / 0.75;
  } else {
    out.i3 = (antiderivative_g(s + a) - antiderivative_g(s - a)) / (q * q * q);
  }

  const double x = z.real();
  out.term1 = x == 0.0 ? Complex{} : -(3.0 * x / (q * q)) * out.i1;
  out.term2 = (3.0 / q) * out.i2;
  out.term3 = 0.75 * out.i3;
  return out;
}

Complex quant_closed_form(Complex z, double q) {
  check_arguments(z, q);
  const Complex s = z / q;
  const double a = 0.5 * q;
  const double dist = std::min(std::abs(s - 1.0), std::abs(s + 1.0));
  if (z.imag() > 0.0 && a <= 0.5 * dist) return quant_rearranged(s, q);

  const double q2 = q * q;
  const double q3 = q2 * q;

  // Polynomial parts of term2 + term3 collapse to 3 (1 - s^2) / (2 q^2) + 3/8.
  CompensatedSum sum;
  sum.add(1.5 * (1.0 - s * s) / q2);
  sum.add(Complex{0.375, 0.0});
  sum.add((3.0 / q2) * s * (1.0 - s * s) * branch_log(s));
  const Complex up = s + a;
  const Complex down = s - a;
  sum.add((0.75 / q3) * quartic_weight(up) * branch_log(up));
  sum.add(-(0.75 / q3) * quartic_weight(down) * branch_log(down));
  return sum.value();
}

StaticValue chi_static_pv_bounded(double q) {
  if (!std::isfinite(q) || !(q > 0.0)) {
    throw DomainError("chi_static_pv: q must be finite and > 0; use chi_ratio otherwise");
  }
  const double a = 0.5 * q;
  const double a2 = a * a;

  if (q < 0.5) {
    auto d = [](int n) {
      const double m = 2.0 * n - 1.0;
      return 8.0 / (m * (m * m - 4.0));
    };
    double sum = 0.0;
    double power = a2;  // a^(2n-2)
    int n = 2;
    for (; n < 200; ++n) {
      const double term = d(n) * power;
      sum += term;
      if (term <= 1e-17 * sum) break;
      power *= a2;
    }
    const double bound = 0.375 * d(n + 1) * power * a2 / (1.0 - a2);
    return {1.0 - 0.375 * sum, bound};
  }

  double log_part = 0.0;
  if (a != 1.0) {
    const double one_minus = 1.0 - a2;
    log_part = one_minus * one_minus / a * std::log(std::abs((1.0 - a) / (1.0 + a)));
  }
  const double bracket = 2.0 / 3.0 + 2.0 * (a2 - 2.0) + log_part;
  return {4.0 / (q * q) + 0.75 / (q * q) * bracket, 0.0};
}

double chi_static_pv(double q) { return chi_static_pv_bounded(q).value; }

}  // namespace diamag::kernel
