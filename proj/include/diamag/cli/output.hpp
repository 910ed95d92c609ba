#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diamag/kernel/grid.hpp"

namespace diamag::cli {

inline constexpr const char* kCsvHeader =
    "q,x,y,chi_total_re,chi_total_im,chi_classic_re,chi_classic_im,chi_quant_re,chi_quant_im,"
    "method,err_est";

struct OutputRow {
  double q;
  double x;
  double y;
  Complex total;
  Complex classic;
  Complex quant;
  std::string method;  // "error" for a failed point
  double err_est;
  std::string error;   // not written to CSV

  bool ok() const { return method != "error"; }
};

// With v_fermi set the chi values are scaled to absolute CGS units.
OutputRow make_row(const kernel::GridPoint& point, const kernel::GridOutcome& outcome,
                   std::optional<double> v_fermi = std::nullopt);

std::vector<OutputRow> evaluate_rows(std::span<const kernel::GridPoint> points,
                                     const kernel::KernelSettings& settings,
                                     std::optional<double> v_fermi = std::nullopt);

// 17 significant digits in exponent form, independent of locale; "nan" for NaN.
std::string format_number(double v);

std::string csv_line(const OutputRow& row);
void write_csv(std::ostream& out, std::span<const OutputRow> rows);

}  // namespace diamag::cli
