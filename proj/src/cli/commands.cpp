#include "diamag/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "diamag/cli/output.hpp"
#include "diamag/cli/svg.hpp"
#include "diamag/cli/verify.hpp"
#include "diamag/core/units.hpp"
#include "diamag/kernel/chi.hpp"

namespace diamag::cli {

namespace {

std::string complex_text(Complex v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.16e %c %.16e i", v.real(), v.imag() < 0 ? '-' : '+',
                std::abs(v.imag()));
  return buf;
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

int usage_error(std::ostream& err, const ValidationError& e) {
  err << "error: --" << e.what() << '\n';
  return kExitUsage;
}

// Opens before any work so an unwritable path fails fast.
bool open_output(std::ofstream& file, const std::string& path, std::ostream& err) {
  file.open(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

int write_outputs(const std::vector<OutputRow>& rows, std::ofstream& csv,
                  std::ofstream* svg_file, const std::vector<Series>& series,
                  const PlotOptions& plot, std::ostream& err) {
  write_csv(csv, rows);
  csv.flush();
  if (!csv) {
    err << "error: failed while writing CSV\n";
    return kExitUsage;
  }
  if (svg_file) {
    *svg_file << render_svg(series, plot);
    svg_file->flush();
    if (!*svg_file) {
      err << "error: failed while writing SVG\n";
      return kExitUsage;
    }
  }
  int failed = 0;
  for (const auto& r : rows) {
    if (!r.ok()) {
      if (failed < 5) {
        err << "error at q=" << format_number(r.q) << " x=" << format_number(r.x)
            << " y=" << format_number(r.y) << ": " << r.error << '\n';
      }
      ++failed;
    }
  }
  if (failed) {
    err << failed << " point(s) failed\n";
    return kExitNumerical;
  }
  return kExitOk;
}

Series magnitude_series(const std::vector<OutputRow>& rows, std::size_t begin, std::size_t end,
                        Axis axis, std::string label) {
  Series s{std::move(label), {}, {}};
  for (std::size_t i = begin; i < end; ++i) {
    const auto& r = rows[i];
    s.xs.push_back(axis == Axis::Q ? r.q : axis == Axis::X ? r.x : r.y);
    s.ys.push_back(std::abs(r.total));
  }
  return s;
}

}  // namespace

int cmd_eval(const EvalOptions& options, const Settings& settings, std::ostream& out,
             std::ostream& err) {
  if (options.v_fermi && !(std::isfinite(*options.v_fermi) && *options.v_fermi > 0.0)) {
    err << "error: --vf: must be finite and > 0\n";
    return kExitUsage;
  }
  std::optional<DimensionlessPoint> point;
  try {
    point = DimensionlessPoint::make(options.x, options.y, options.q);
  } catch (const ValidationError& e) {
    return usage_error(err, e);
  }

  kernel::Evaluation ev;
  try {
    ev = kernel::evaluate(*point, settings.kernel);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  kernel::GridOutcome outcome{true, ev.result, ev.regime, {}};
  const OutputRow row = make_row({options.x, options.y, options.q}, outcome, options.v_fermi);
  const std::string units = options.v_fermi ? "cgs" : "chi/chi_L";

  if (options.json) {
    nlohmann::ordered_json j;
    j["q"] = row.q;
    j["x"] = row.x;
    j["y"] = row.y;
    j["chi_total_re"] = row.total.real();
    j["chi_total_im"] = row.total.imag();
    j["chi_classic_re"] = row.classic.real();
    j["chi_classic_im"] = row.classic.imag();
    j["chi_quant_re"] = row.quant.real();
    j["chi_quant_im"] = row.quant.imag();
    j["method"] = row.method;
    j["err_est"] = row.err_est;
    j["regime"] = std::string(kernel::to_string(ev.regime));
    j["units"] = units;
    if (options.v_fermi) j["v_fermi"] = *options.v_fermi;
    if (ev.terms) {
      const auto& t = *ev.terms;
      auto put = [&j](const char* name, Complex v) {
        j["terms"][name] = {{"re", v.real()}, {"im", v.imag()}};
      };
      put("i1", t.i1);
      put("i2", t.i2);
      put("i3", t.i3);
      put("term1", t.term1);
      put("term2", t.term2);
      put("term3", t.term3);
    } else {
      j["terms"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "x = " << short_number(row.x) << ", y = " << short_number(row.y)
      << ", q = " << short_number(row.q) << '\n';
  out << "regime      " << kernel::to_string(ev.regime) << '\n';
  out << "method      " << row.method << '\n';
  out << "units       " << units << '\n';
  out << "chi_total   " << complex_text(row.total) << '\n';
  out << "chi_classic " << complex_text(row.classic) << '\n';
  out << "chi_quant   " << complex_text(row.quant) << '\n';
  out << "err_est     " << format_number(row.err_est) << '\n';
  if (ev.terms) {
    const auto& t = *ev.terms;
    out << "terms (chi/chi_L)\n";
    out << "  I1    " << complex_text(t.i1) << '\n';
    out << "  I2    " << complex_text(t.i2) << '\n';
    out << "  I3    " << complex_text(t.i3) << '\n';
    out << "  term1 " << complex_text(t.term1) << '\n';
    out << "  term2 " << complex_text(t.term2) << '\n';
    out << "  term3 " << complex_text(t.term3) << '\n';
  } else {
    out << "terms       unavailable (pole on an integration endpoint)\n";
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& options, const Settings& settings, std::ostream& err) {
  if (options.v_fermi && !(std::isfinite(*options.v_fermi) && *options.v_fermi > 0.0)) {
    err << "error: --vf: must be finite and > 0\n";
    return kExitUsage;
  }
  std::vector<kernel::GridPoint> points;
  try {
    points = options.spec.generate();
  } catch (const ValidationError& e) {
    return usage_error(err, e);
  }
  std::ofstream csv, svg;
  if (!open_output(csv, options.out, err)) return kExitUsage;
  if (options.svg && !open_output(svg, *options.svg, err)) return kExitUsage;

  const auto rows = evaluate_rows(points, settings.kernel, options.v_fermi);
  const std::string axis(to_string(options.spec.axis));
  std::string label;
  for (Axis a : {Axis::Q, Axis::X, Axis::Y}) {
    if (a == options.spec.axis) continue;
    const double v = a == Axis::Q ? options.spec.q : a == Axis::X ? options.spec.x : options.spec.y;
    if (!label.empty()) label += ", ";
    label += std::string(to_string(a)) + " = " + short_number(v);
  }
  const std::vector<Series> series{
      magnitude_series(rows, 0, rows.size(), options.spec.axis, label)};
  const PlotOptions plot{"|chi/chi_L| along " + axis, axis,
                         options.v_fermi ? "|chi| (CGS)" : "|chi/chi_L|",
                         options.spec.spacing == Spacing::Log};
  return write_outputs(rows, csv, options.svg ? &svg : nullptr, series, plot, err);
}

int cmd_figure1(const Figure1Options& options, const Settings& settings, std::ostream& err) {
  std::ofstream csv, svg;
  if (!open_output(csv, options.out, err)) return kExitUsage;
  if (options.svg && !open_output(svg, *options.svg, err)) return kExitUsage;

  std::vector<kernel::GridPoint> points;
  for (double y : kFigure1Y) {
    SweepSpec spec{Axis::Q, kFigure1QMin, kFigure1QMax, kFigure1Points, Spacing::Log, 0.0, y,
                   1.0};
    const auto curve = spec.generate();
    points.insert(points.end(), curve.begin(), curve.end());
  }
  const auto rows = evaluate_rows(points, settings.kernel);

  std::vector<Series> series;
  for (std::size_t c = 0; c < std::size(kFigure1Y); ++c) {
    const std::size_t begin = c * kFigure1Points;
    series.push_back(magnitude_series(rows, begin, begin + kFigure1Points, Axis::Q,
                                      "curve " + std::to_string(c + 1) +
                                          ": y = " + short_number(kFigure1Y[c])));
  }
  const PlotOptions plot{"|chi/chi_L| at x = 0", "q = k / k_F", "|chi/chi_L|", true};
  return write_outputs(rows, csv, options.svg ? &svg : nullptr, series, plot, err);
}

int cmd_verify(double tol, const Settings& settings, std::ostream& out) {
  if (!std::isfinite(tol) || !(tol > 0.0)) {
    out << "error: --tol: must be finite and > 0\n";
    return kExitUsage;
  }
  const auto checks = run_verification(tol, settings);
  int failed = 0;
  for (const auto& c : checks) {
    out << format_check(c) << '\n';
    if (!c.passed) ++failed;
  }
  out << (failed ? "FAILED " : "OK ") << checks.size() - failed << "/" << checks.size()
      << " checks passed\n";
  return failed ? kExitNumerical : kExitOk;
}

}  // namespace diamag::cli
