#include "diamag/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>

#include "diamag/kernel/chi.hpp"
#include "diamag/kernel/closed_form.hpp"
#include "diamag/oracle/extended.hpp"
#include "diamag/oracle/kinetic.hpp"
#include "diamag/oracle/nascent_delta.hpp"
#include "diamag/oracle/quadrature_chi.hpp"
#include "diamag/oracle/smallk.hpp"

namespace diamag::cli {

namespace {

constexpr double kGridX[] = {0.0, 0.1, 0.5};
constexpr double kGridY[] = {1e-3, 1e-2, 0.1, 1.0};
constexpr double kGridQ[] = {0.05, 0.1, 0.5, 1.0, 1.9};

double rel_diff(Complex a, Complex b) {
  const double scale = std::abs(b);
  return scale == 0.0 ? std::abs(a) : std::abs(a - b) / scale;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Runs a check body and turns library errors into a failed result.
CheckResult guarded(const std::string& name, double threshold,
                    const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::nan(""), threshold, std::string("error: ") + e.what()};
  }
}

CheckResult grid_check(const std::string& name, double threshold, const Settings& settings,
                       const std::function<Complex(const DimensionlessPoint&)>& oracle) {
  return guarded(name, threshold, [&] {
    double worst = 0.0;
    std::string where;
    for (double x : kGridX) {
      for (double y : kGridY) {
        for (double q : kGridQ) {
          const auto p = DimensionlessPoint::make(x, y, q);
          const double d = rel_diff(kernel::chi_ratio(p, settings.kernel).total, oracle(p));
          if (!(d <= worst)) {
            worst = d;
            where = "(x, y, q) = (" + num(x) + ", " + num(y) + ", " + num(q) + ")";
          }
        }
      }
    }
    return CheckResult{name, worst < threshold, worst, threshold,
                       "60 points, worst at " + where};
  });
}

}  // namespace

std::vector<CheckResult> run_verification(double tol, const Settings& settings) {
  std::vector<CheckResult> out;
  const auto& quad = settings.quadrature;

  out.push_back(grid_check("closed form vs quadrature", tol, settings,
                           [&](const DimensionlessPoint& p) {
                             return oracle::chi_ratio_quadrature(p, quad).total;
                           }));
  out.push_back(grid_check("closed form vs kinetic formula", 1e-6, settings,
                           [&](const DimensionlessPoint& p) {
                             return oracle::chi_from_kinetic(p, quad).total;
                           }));

  out.push_back(guarded("classical term zero at x = 0", 0.0, [&] {
    double worst = 0.0;
    for (double y : kGridY) {
      for (double q : kGridQ) {
        const auto r = kernel::chi_ratio(DimensionlessPoint::make(0.0, y, q), settings.kernel);
        worst = std::max({worst, std::abs(r.classic.real()), std::abs(r.classic.imag())});
      }
    }
    return CheckResult{"classical term zero at x = 0", worst == 0.0, worst, 0.0,
                       "bitwise, 20 points"};
  }));

  const double four_pi = 4.0 * std::numbers::pi;
  std::optional<oracle::JIntegrals> j;
  try {
    j = oracle::j_integrals_nascent_delta(quad);
  } catch (const std::exception& e) {
    for (const char* name : {"J1 nascent delta", "J2 nascent delta", "J1 - 3 J2"}) {
      out.push_back({name, false, std::nan(""), 1e-4, std::string("error: ") + e.what()});
    }
  }
  if (j) {
    const double e1 = std::abs(j->j1 - four_pi) / four_pi;
    const double e2 = std::abs(j->j2 - four_pi) / four_pi;
    const double d = j->j1 - 3.0 * j->j2;
    const double e3 = std::abs(d + 2.0 * four_pi) / (2.0 * four_pi);
    out.push_back({"J1 nascent delta", e1 < 1e-4, e1, 1e-4,
                   "J1 = " + num(j->j1) + ", target 4pi = " + num(four_pi)});
    out.push_back({"J2 nascent delta", e2 < 1e-4, e2, 1e-4,
                   "J2 = " + num(j->j2) + ", target 4pi = " + num(four_pi)});
    out.push_back({"J1 - 3 J2", e3 < 1e-4, e3, 1e-4,
                   "J1 - 3 J2 = " + num(d) + ", target -8pi = " + num(-2.0 * four_pi)});
  }

  out.push_back(guarded("Landau limit", 1e-6, [&] {
    const double v = kernel::chi_static_pv(1e-3);
    const double d = std::abs(v - 1.0);
    return CheckResult{"Landau limit", d < 1e-6, d, 1e-6,
                       "static PV at q = 1e-3 is " + num(v)};
  }));
  out.push_back(guarded("small-k static path", 1e-4, [&] {
    const Complex v = oracle::chi_quant_smallk(DimensionlessPoint::make(0.0, 0.0, 1e-3), quad);
    const double d = std::abs(v - 1.0);
    return CheckResult{"small-k static path", d < 1e-4, d, 1e-4, "ratio " + num(v.real())};
  }));
  out.push_back(guarded("static plateau", 1e-5, [&] {
    const double pv = kernel::chi_static_pv(1.0);
    const Complex near =
        kernel::chi_ratio(DimensionlessPoint::make(0.0, 1e-10, 1.0), settings.kernel).total;
    const double d = std::abs(near - 0.948046);
    const double agree = std::abs(near - pv);
    return CheckResult{"static plateau", d <= 1e-5 && agree <= 1e-6, d, 1e-5,
                       "chi(0, 1e-10, 1) = " + num(near.real()) + ", PV path " + num(pv) +
                           ", paths differ by " + num(agree)};
  }));

  out.push_back(guarded("collisional suppression", 1e-6, [&] {
    const auto at = [&](double q) {
      return std::abs(
          kernel::chi_ratio(DimensionlessPoint::make(0.0, 1e-3, q), settings.kernel).total);
    };
    const double small = at(1e-6);
    const double mid = at(0.5);
    const bool ok = small < 1e-6 && mid >= 0.90 && mid <= 0.99;
    return CheckResult{"collisional suppression", ok, small, 1e-6,
                       "|chi|(q = 1e-6) = " + num(small) + ", |chi|(q = 0.5) = " + num(mid) +
                           " (window [0.90, 0.99])"};
  }));
  out.push_back(guarded("suppression vs extended precision", 1e-6, [&] {
    double worst = 0.0;
    for (double y : {1e-4, 1e-3}) {
      for (double q : {1e-5, 1e-4, 1e-3}) {
        const auto p = DimensionlessPoint::make(0.0, y, q);
        const auto ext = oracle::chi_ratio_extended(p.z(), q);
        worst = std::max(worst, rel_diff(kernel::chi_ratio(p, settings.kernel).total, ext.total));
      }
    }
    return CheckResult{"suppression vs extended precision", worst < 1e-6, worst, 1e-6,
                       "x = 0, y in {1e-4, 1e-3}, q in {1e-5, 1e-4, 1e-3}"};
  }));
  return out;
}

std::string format_check(const CheckResult& c) {
  return std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name + ": measured " +
         num(c.measured) + ", threshold " + num(c.threshold) + "; " + c.detail;
}

}  // namespace diamag::cli
