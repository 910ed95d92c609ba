#pragma once

#include <string>
#include <vector>

namespace diamag::cli {

struct Series {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  // Falls back to linear when any abscissa is <= 0.
  bool log_x = true;
};

inline constexpr int kSvgWidth = 960;
inline constexpr int kSvgHeight = 640;

// Static line chart, one polyline per series. Non-finite points are dropped.
std::string render_svg(const std::vector<Series>& series, const PlotOptions& options);

}  // namespace diamag::cli
