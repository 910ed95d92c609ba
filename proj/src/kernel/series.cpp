#include "diamag/kernel/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "diamag/core/error.hpp"
#include "diamag/kernel/branch_log.hpp"

namespace diamag::kernel {

namespace {

constexpr double kStopRelative = 1e-17;
constexpr int kMaxTerms = 400;

// Moments of (1 - t^2) and (1 - t^2)^2 against t^k over [-1, 1], k even.
double moment_linear(int k) { return 4.0 / ((k + 1.0) * (k + 3.0)); }
double moment_quartic(int k) { return 16.0 / ((k + 1.0) * (k + 3.0) * (k + 5.0)); }

double binomial(int n, int k) {
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double tail_factor(double ratio) { return ratio / (1.0 - ratio); }

}  // namespace

SeriesValue quant_series_small_q(Complex s, double q) {
  const double a = 0.5 * q;
  const double pole_distance = std::min(std::abs(s - 1.0), std::abs(s + 1.0));
  if (!(a < pole_distance)) {
    throw DomainError("small-q series: q/2 must be below the distance from s to +-1");
  }

  // Taylor coefficients of (1 - w^2)^2 about s.
  const Complex one_minus_s2 = 1.0 - s * s;
  const std::array<Complex, 5> poly{one_minus_s2 * one_minus_s2, -4.0 * s * one_minus_s2,
                                    6.0 * s * s - 2.0, 4.0 * s, Complex{1.0, 0.0}};

  // Taylor coefficients of L about s: l_0 = L(s),
  // l_k = (-1)^(k-1) / k [(s - 1)^-k - (s + 1)^-k].
  std::vector<Complex> log_coeff{branch_log(s)};
  const Complex inv_minus = 1.0 / (s - 1.0);
  const Complex inv_plus = 1.0 / (s + 1.0);
  Complex pow_minus{1.0, 0.0};
  Complex pow_plus{1.0, 0.0};
  auto extend_log = [&](int upto) {
    while (static_cast<int>(log_coeff.size()) <= upto) {
      const int k = static_cast<int>(log_coeff.size());
      pow_minus *= inv_minus;
      pow_plus *= inv_plus;
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      log_coeff.push_back(sign / k * (pow_minus - pow_plus));
    }
  };

  const double ratio = (a / pole_distance) * (a / pole_distance);
  Complex sum{};
  double a_power = 1.0;  // a^(m-3)
  double last = 0.0;
  int m = 3;
  for (; m < kMaxTerms; m += 2) {
    extend_log(m);
    Complex coeff = (m == 3) ? Complex{2.0, 0.0} : Complex{};
    for (int k = 0; k <= std::min(4, m); ++k) coeff += poly[k] * log_coeff[m - k];
    const Complex term = coeff * a_power;
    sum += term;
    last = std::abs(term);
    if (m >= 5 && last <= kStopRelative * std::abs(sum)) break;
    a_power *= a * a;
  }
  if (m >= kMaxTerms) throw DomainError("small-q series did not converge");
  return {0.1875 * sum, 0.1875 * last * tail_factor(ratio), (m - 1) / 2};
}

SeriesValue quant_series_large_s(Complex s, double q) {
  const double a = 0.5 * q;
  const double abs_s = std::abs(s);
  if (!(abs_s > 1.0 + a)) throw DomainError("large-s series: requires |s| > 1 + q/2");

  const Complex inv_s2 = 1.0 / (s * s);
  const double a2 = a * a;
  Complex s_power = inv_s2 * inv_s2;  // s^(-2n), n = 2
  Complex sum{};
  double last = 0.0;
  int n = 2;
  for (; n < kMaxTerms; ++n) {
    double inner = 0.0;
    double a_power = 1.0;  // a^(2j-2)
    for (int j = 1; j <= n - 1; ++j) {
      inner += a_power * binomial(2 * n - 1, 2 * j + 1) * moment_quartic(2 * (n - 1 - j));
      a_power *= a2;
    }
    const Complex term = inner * s_power;
    sum += term;
    last = std::abs(term);
    if (n >= 3 && last <= kStopRelative * std::abs(sum)) break;
    s_power *= inv_s2;
  }
  if (n >= kMaxTerms) throw DomainError("large-s series did not converge");
  const double ratio = (1.0 + a) * (1.0 + a) / (abs_s * abs_s);
  return {0.1875 * sum, 0.1875 * last * tail_factor(ratio), n - 1};
}

SeriesValue classic_series_large_s(Complex z, double q) {
  const double x = z.real();
  if (x == 0.0) return {{}, 0.0, 0};
  const Complex s = z / q;
  const double abs_s = std::abs(s);
  if (!(abs_s > 1.0)) throw DomainError("large-s series: requires |s| > 1");

  // i1 = -(1/q) sum_K M_2K s^-(2K+1), so term1 = (3 x / q^3) sum_K M_2K s^-(2K+1).
  const Complex inv_s2 = 1.0 / (s * s);
  Complex s_power = 1.0 / s;
  Complex sum{};
  double last = 0.0;
  int k = 0;
  for (; k < kMaxTerms; ++k) {
    const Complex term = moment_linear(2 * k) * s_power;
    sum += term;
    last = std::abs(term);
    if (k >= 1 && last <= kStopRelative * std::abs(sum)) break;
    s_power *= inv_s2;
  }
  const double prefactor = 3.0 * x / (q * q * q);
  const double ratio = 1.0 / (abs_s * abs_s);
  return {prefactor * sum, prefactor * last * tail_factor(ratio), k + 1};
}

TermBreakdown asymptotic_integrals(Complex z, double q) {
  const Complex s = z / q;
  const double a = 0.5 * q;
  if (!(std::abs(s) > 1.0 + a)) throw DomainError("asymptotic integrals: requires |s| > 1 + q/2");

  const Complex inv_s2 = 1.0 / (s * s);
  const double a2 = a * a;
  Complex i1_sum{}, i2_sum{}, i3_sum{};
  Complex odd_power = 1.0 / s;  // s^-(2n+1)
  Complex even_power = inv_s2;  // s^-(2n)
  for (int n = 0; n < kMaxTerms; ++n) {
    const Complex t1 = moment_linear(2 * n) * odd_power;
    i1_sum += t1;
    Complex t2{}, t3{};
    if (n >= 1) {
      t2 = moment_linear(2 * n) * even_power;
      double inner = 0.0;
      double a_power = 1.0;
      for (int j = 0; j <= n - 1; ++j) {
        inner += a_power * binomial(2 * n - 1, 2 * j + 1) * moment_quartic(2 * (n - 1 - j));
        a_power *= a2;
      }
      t3 = inner * even_power;
      i2_sum += t2;
      i3_sum += t3;
      even_power *= inv_s2;
    }
    odd_power *= inv_s2;
    if (n >= 2 && std::abs(t1) <= kStopRelative * std::abs(i1_sum) &&
        std::abs(t2) <= kStopRelative * std::abs(i2_sum) &&
        std::abs(t3) <= kStopRelative * std::abs(i3_sum)) {
      break;
    }
  }

  TermBreakdown out;
  out.i1 = -i1_sum / q;
  out.i2 = -i2_sum / q;
  out.i3 = i3_sum / (q * q);
  const double x = z.real();
  out.term1 = x == 0.0 ? Complex{} : -(3.0 * x / (q * q)) * out.i1;
  out.term2 = (3.0 / q) * out.i2;
  out.term3 = 0.75 * out.i3;
  return out;
}

ChiResult chi_series_small_q(const DimensionlessPoint& point, const KernelSettings& settings) {
  const RegimeTag regime = regime_select(point, settings);
  const Complex z = point.z();
  const double q = point.q();

  if (regime == RegimeTag::LargeSAsymptotic) {
    const SeriesValue classic = classic_series_large_s(z, q);
    const SeriesValue quant = quant_series_large_s(point.s(), q);
    return ChiResult::from_parts(classic.value, quant.value, Method::SeriesSmallQ,
                                 classic.truncation_bound + quant.truncation_bound);
  }
  if (regime == RegimeTag::SmallqStaticSeries) {
    Complex classic{};
    if (point.x() != 0.0) {
      const Complex s = point.s();
      const Complex i1 = (-2.0 * s + (1.0 - s * s) * branch_log(s)) / q;
      classic = -(3.0 * point.x() / (q * q)) * i1;
    }
    const SeriesValue quant = quant_series_small_q(point.s(), q);
    return ChiResult::from_parts(classic, quant.value, Method::SeriesSmallQ,
                                 quant.truncation_bound);
  }
  throw DomainError("chi_series_small_q: point is not in a series regime (" +
                    std::string(to_string(regime)) + ")");
}

}  // namespace diamag::kernel
