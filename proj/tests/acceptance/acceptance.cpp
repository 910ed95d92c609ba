// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diamag/cli/commands.hpp"
#include "diamag/core/units.hpp"
#include "diamag/kernel/chi.hpp"
#include "diamag/oracle/kinetic.hpp"
#include "diamag/oracle/nascent_delta.hpp"
#include "diamag/oracle/quadrature_chi.hpp"

using namespace diamag;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kGridX[] = {0.0, 0.1, 0.5};
constexpr double kGridY[] = {1e-3, 1e-2, 0.1, 1.0};
constexpr double kGridQ[] = {0.05, 0.1, 0.5, 1.0, 1.9};

// Computed separately in 40-digit arithmetic from the CODATA constants.
constexpr double kChiL157 = -3.226734909292844279778e-7;

struct Outcome {
  bool passed;
  std::string detail;
};

double rel(Complex a, Complex b) {
  const double scale = std::abs(b);
  return scale == 0.0 ? std::abs(a) : std::abs(a - b) / scale;
}

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int failures = 0;

void run(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::string timing = "runtime " + g(secs) + " s";
  if (budget_s > 0) {
    timing += " (budget " + g(budget_s) + " s)";
    if (secs >= budget_s) {
      o.passed = false;
      timing += " over budget";
    }
  }
  if (!o.passed) ++failures;
  std::printf("%s  [%d] %s: %s; %s\n", o.passed ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str(), timing.c_str());
  std::fflush(stdout);
}

template <class F>
double worst_on_grid(F&& oracle, std::string& where) {
  double worst = 0.0;
  for (double x : kGridX) {
    for (double y : kGridY) {
      for (double q : kGridQ) {
        const auto p = DimensionlessPoint::make(x, y, q);
        const double d = rel(kernel::chi_ratio(p).total, oracle(p));
        if (!(d <= worst)) {
          worst = d;
          where = "(" + g(x) + ", " + g(y) + ", " + g(q) + ")";
        }
      }
    }
  }
  return worst;
}

struct Figure1Row {
  double q;
  double y;
  double re;
  double im;
};

std::string run_figure1(const std::filesystem::path& path) {
  std::ostringstream err;
  const int code = cli::cmd_figure1({path.string(), std::nullopt}, {}, err);
  if (code != cli::kExitOk) throw std::runtime_error("cmd_figure1 exit " + std::to_string(code));
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<Figure1Row> parse_figure1(const std::string& csv) {
  std::vector<Figure1Row> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    rows.push_back({std::stod(f[0]), std::stod(f[2]), std::stod(f[3]), std::stod(f[4])});
  }
  return rows;
}

}  // namespace

int main() {
  run(1, "Landau limit", 1e-3, [] {
    const double a = std::abs(kernel::chi_static_pv(1e-3) - 1.0);
    const double expect = 1.0 - 0.1 * 0.1 / 20.0;
    const double b = std::abs(kernel::chi_static_pv(0.1) - expect) / expect;
    return Outcome{a < 1e-6 && b < 1e-6, "|pv(1e-3) - 1| = " + g(a) +
                                             ", rel |pv(0.1) - (1 - q^2/20)| = " + g(b) +
                                             " (tol 1e-6)"};
  });

  run(2, "chi_L identity", 0, [] {
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double vf = std::pow(10.0, 7.0 + 2.0 * i / 200.0);
      const double a = landau_chi_physical(vf);
      const double b = landau_chi_textbook(vf);
      worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    const double ref = std::abs(landau_chi_physical(1.57e8) - kChiL157) / std::abs(kChiL157);
    return Outcome{worst < 1e-12 && ref < 1e-10,
                   "forms differ by " + g(worst) + " (tol 1e-12), v_F = 1.57e8 gives " +
                       g(landau_chi_physical(1.57e8)) + ", off reference by " + g(ref) +
                       " (tol 1e-10)"};
  });

  run(3, "closed form vs quadrature", 10.0, [] {
    std::string where;
    const double worst =
        worst_on_grid([](const DimensionlessPoint& p) { return oracle::chi_ratio_quadrature(p).total; },
                      where);
    return Outcome{worst < 1e-8, "max rel " + g(worst) + " at " + where + " (tol 1e-8)"};
  });

  run(4, "kinetic consistency", 30.0, [] {
    std::string where;
    const double worst =
        worst_on_grid([](const DimensionlessPoint& p) { return oracle::chi_from_kinetic(p).total; },
                      where);
    return Outcome{worst < 1e-6, "max rel " + g(worst) + " at " + where + " (tol 1e-6)"};
  });

  run(5, "classical zero", 0, [] {
    int tested = 0;
    int nonzero = 0;
    for (int i = 0; i < 40; ++i) {
      for (int j = 0; j < 40; ++j) {
        const double y = std::pow(10.0, -10.0 + 11.0 * i / 39.0);
        const double q = std::pow(10.0, -7.0 + 7.3 * j / 39.0);
        const Complex c = kernel::chi_ratio(DimensionlessPoint::make(0.0, y, q)).classic;
        ++tested;
        // Bitwise: +0.0 in both parts.
        if (std::signbit(c.real()) || std::signbit(c.imag()) || c != Complex(0.0, 0.0)) ++nonzero;
      }
    }
    return Outcome{nonzero == 0,
                   std::to_string(nonzero) + " of " + std::to_string(tested) + " points nonzero"};
  });

  const auto fig_a = std::filesystem::temp_directory_path() / "diamag_accept_fig1_a.csv";
  const auto fig_b = std::filesystem::temp_directory_path() / "diamag_accept_fig1_b.csv";

  run(6, "collisional suppression", 0, [&] {
    const auto at = [](double q) {
      return std::abs(kernel::chi_ratio(DimensionlessPoint::make(0.0, 1e-3, q)).total);
    };
    const double small = at(1e-6);
    const double mid = at(0.5);
    const bool levels = small < 1e-6 && mid >= 0.90 && mid <= 0.99;

    const auto rows = parse_figure1(run_figure1(fig_a));
    std::map<double, std::vector<Figure1Row>> curves;
    for (const auto& r : rows) curves[r.y].push_back(r);

    bool monotone = true;
    std::string mono_detail;
    std::vector<std::pair<double, double>> crossings;  // (y, q at 1/2)
    for (const auto& [y, curve] : curves) {
      int drops = 0;
      double peak_q = 0.0;
      double peak = -1.0;
      for (std::size_t i = 0; i < curve.size(); ++i) {
        const double m = std::hypot(curve[i].re, curve[i].im);
        if (m > peak) {
          peak = m;
          peak_q = curve[i].q;
        }
        if (i > 0 && m < std::hypot(curve[i - 1].re, curve[i - 1].im)) ++drops;
      }
      if (drops > 0) monotone = false;
      mono_detail += " y=" + g(y) + ": " + std::to_string(drops) + " decreases, peak " + g(peak) +
                     " at q=" + g(peak_q) + ";";
      double cross = std::nan("");
      for (std::size_t i = 1; i < curve.size(); ++i) {
        const double m0 = std::hypot(curve[i - 1].re, curve[i - 1].im);
        const double m1 = std::hypot(curve[i].re, curve[i].im);
        if (m0 < 0.5 && m1 >= 0.5) {
          // Log-linear interpolation between the bracketing samples.
          const double t = (0.5 - m0) / (m1 - m0);
          cross = std::exp(std::log(curve[i - 1].q) +
                           t * (std::log(curve[i].q) - std::log(curve[i - 1].q)));
          break;
        }
      }
      crossings.emplace_back(y, cross);
    }
    // Map iterates y ascending, so crossings must ascend as well.
    bool ordered = crossings.size() == 4;
    std::string cross_detail;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
      if (!std::isfinite(crossings[i].second)) ordered = false;
      if (i > 0 && !(crossings[i].second > crossings[i - 1].second)) ordered = false;
      cross_detail += " " + g(crossings[i].second);
    }
    return Outcome{levels && monotone && ordered,
                   "|chi|(1e-6) = " + g(small) + " (< 1e-6), |chi|(0.5) = " + g(mid) +
                       " (in [0.90, 0.99]); monotone " + (monotone ? "yes" : "no") + ":" +
                       mono_detail + " half crossings by ascending y:" + cross_detail +
                       (ordered ? " (ordered)" : " (not ordered)")};
  });

  run(7, "static plateau", 0, [] {
    const double pv = kernel::chi_static_pv(1.0);
    const Complex near = kernel::chi_ratio(DimensionlessPoint::make(0.0, 1e-10, 1.0)).total;
    const double d = std::abs(near.real() - 0.948046);
    const double agree = std::abs(near - Complex(pv, 0.0)) / std::abs(pv);
    return Outcome{d <= 1e-5 && agree <= 1e-6,
                   "chi(0, 1e-10, 1) = " + g(near.real()) + " (target 0.948046 +- 1e-5), PV path " +
                       g(pv) + ", paths differ by " + g(agree) + " (tol 1e-6)"};
  });

  run(8, "nascent delta integrals", 5.0, [] {
    const auto j = oracle::j_integrals_nascent_delta();
    const double four_pi = 4.0 * std::numbers::pi;
    const double e1 = std::abs(j.j1 - four_pi) / four_pi;
    const double e2 = std::abs(j.j2 - four_pi) / four_pi;
    const double diff = j.j1 - 3.0 * j.j2;
    const double e3 = std::abs(diff + 2.0 * four_pi) / (2.0 * four_pi);
    return Outcome{e1 < 1e-4 && e2 < 1e-4 && e3 < 1e-4,
                   "J1 = " + g(j.j1) + " (rel " + g(e1) + "), J2 = " + g(j.j2) + " (rel " + g(e2) +
                       "), J1 - 3 J2 = " + g(diff) + " (rel " + g(e3) + "), tol 1e-4"};
  });

  run(9, "reality and symmetry", 0, [] {
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_im = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double y = std::pow(10.0, -8.0 + 8.0 * u(rng));
      const double q = std::pow(10.0, -6.0 + 6.3 * u(rng));
      worst_im = std::max(
          worst_im, std::abs(kernel::chi_ratio(DimensionlessPoint::make(0.0, y, q)).total.imag()));
    }
    double worst_conj = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double x = 1e-3 + 2.0 * u(rng);
      const double y = std::pow(10.0, -3.0 + 3.0 * u(rng));
      const double q = 0.05 + 1.85 * u(rng);
      const Complex mirrored = kernel::chi_ratio_signed(-x, y, q).total;
      const Complex quad = std::conj(oracle::chi_ratio_quadrature_at({x, y}, q).total);
      worst_conj = std::max(worst_conj, rel(mirrored, quad));
    }
    return Outcome{worst_im < 1e-10 && worst_conj < 1e-8,
                   "max |Im| at x = 0: " + g(worst_im) + " (tol 1e-10), conjugation vs quadrature " +
                       g(worst_conj) + " (tol 1e-8)"};
  });

  run(10, "determinism", 0, [&] {
    const std::string a = run_figure1(fig_a);
    const std::string b = run_figure1(fig_b);
    std::filesystem::remove(fig_a);
    std::filesystem::remove(fig_b);
    return Outcome{!a.empty() && a == b,
                   std::to_string(a.size()) + " and " + std::to_string(b.size()) + " bytes, " +
                       (a == b ? "identical" : "different")};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
