#include "diamag/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "diamag/core/units.hpp"

namespace diamag::cli {

OutputRow make_row(const kernel::GridPoint& point, const kernel::GridOutcome& outcome,
                   std::optional<double> v_fermi) {
  OutputRow row{point.q, point.x, point.y, {}, {}, {}, "error",
                std::numeric_limits<double>::quiet_NaN(), outcome.error};
  if (!outcome.ok) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.total = row.classic = row.quant = Complex(nan, nan);
    return row;
  }
  const ChiResult& r = outcome.result;
  row.classic = r.classic;
  row.quant = r.quant;
  row.err_est = r.err_est;
  if (v_fermi) {
    row.classic = chi_ratio_to_absolute(r.classic, *v_fermi);
    row.quant = chi_ratio_to_absolute(r.quant, *v_fermi);
    row.err_est = std::abs(landau_chi_physical(*v_fermi)) * r.err_est;
  }
  row.total = row.classic + row.quant;
  row.method = std::string(to_string(r.method));
  return row;
}

std::vector<OutputRow> evaluate_rows(std::span<const kernel::GridPoint> points,
                                     const kernel::KernelSettings& settings,
                                     std::optional<double> v_fermi) {
  const auto outcomes = kernel::evaluate_grid_parallel(points, settings);
  std::vector<OutputRow> rows;
  rows.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    rows.push_back(make_row(points[i], outcomes[i], v_fermi));
  }
  return rows;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string csv_line(const OutputRow& row) {
  std::string s;
  for (double v : {row.q, row.x, row.y, row.total.real(), row.total.imag(), row.classic.real(),
                   row.classic.imag(), row.quant.real(), row.quant.imag()}) {
    s += format_number(v);
    s += ',';
  }
  s += row.method;
  s += ',';
  s += format_number(row.err_est);
  return s;
}

void write_csv(std::ostream& out, std::span<const OutputRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << csv_line(row) << '\n';
}

}  // namespace diamag::cli
