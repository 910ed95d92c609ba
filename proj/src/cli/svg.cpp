#include "diamag/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace diamag::cli {

namespace {

constexpr double kLeft = 90.0;
constexpr double kRight = 200.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

const char* const kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
};

}  // namespace

std::string render_svg(const std::vector<Series>& series, const PlotOptions& options) {
  bool log_x = options.log_x;
  for (const auto& s : series) {
    for (double x : s.xs) {
      if (std::isfinite(x) && x <= 0.0) log_x = false;
    }
  }
  auto tx = [log_x](double x) { return log_x ? std::log10(x) : x; };

  Range xr, yr;
  yr.add(0.0);
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
      xr.add(tx(s.xs[i]));
      yr.add(s.ys[i]);
    }
  }
  if (xr.empty()) xr = {0.0, 1.0};
  if (xr.hi == xr.lo) xr.hi = xr.lo + 1.0;
  if (yr.hi == yr.lo) yr.hi = yr.lo + 1.0;
  const double pad = 0.05 * (yr.hi - yr.lo);
  yr.hi += pad;
  if (yr.lo < 0.0) yr.lo -= pad;

  const double pw = kSvgWidth - kLeft - kRight;
  const double ph = kSvgHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (tx(x) - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kSvgWidth) +
         "\" height=\"" + std::to_string(kSvgHeight) + "\" viewBox=\"0 0 " +
         std::to_string(kSvgWidth) + " " + std::to_string(kSvgHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) +
         "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
         escape(options.title) + "</text>\n";
  svg += "<rect x=\"" + fmt("%.1f", kLeft) + "\" y=\"" + fmt("%.1f", kTop) + "\" width=\"" +
         fmt("%.1f", pw) + "\" height=\"" + fmt("%.1f", ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

  // x ticks: decades on a log axis, ten intervals otherwise.
  svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  if (log_x) {
    for (int d = static_cast<int>(std::ceil(xr.lo)); d <= static_cast<int>(std::floor(xr.hi));
         ++d) {
      const double xp = kLeft + (d - xr.lo) / (xr.hi - xr.lo) * pw;
      svg += "<line x1=\"" + fmt("%.2f", xp) + "\" y1=\"" + fmt("%.2f", kTop + ph) +
             "\" x2=\"" + fmt("%.2f", xp) + "\" y2=\"" + fmt("%.2f", kTop + ph + 6) +
             "\" stroke=\"black\"/>\n";
      svg += "<text x=\"" + fmt("%.2f", xp) + "\" y=\"" + fmt("%.2f", kTop + ph + 22) +
             "\" text-anchor=\"middle\">1e" + std::to_string(d) + "</text>\n";
    }
  } else {
    for (int i = 0; i <= 10; ++i) {
      const double v = xr.lo + i * (xr.hi - xr.lo) / 10;
      const double xp = kLeft + i * pw / 10;
      svg += "<line x1=\"" + fmt("%.2f", xp) + "\" y1=\"" + fmt("%.2f", kTop + ph) +
             "\" x2=\"" + fmt("%.2f", xp) + "\" y2=\"" + fmt("%.2f", kTop + ph + 6) +
             "\" stroke=\"black\"/>\n";
      svg += "<text x=\"" + fmt("%.2f", xp) + "\" y=\"" + fmt("%.2f", kTop + ph + 22) +
             "\" text-anchor=\"middle\">" + fmt("%.3g", v) + "</text>\n";
    }
  }
  for (int i = 0; i <= 8; ++i) {
    const double v = yr.lo + i * (yr.hi - yr.lo) / 8;
    const double yp = py(v);
    svg += "<line x1=\"" + fmt("%.2f", kLeft - 6) + "\" y1=\"" + fmt("%.2f", yp) + "\" x2=\"" +
           fmt("%.2f", kLeft) + "\" y2=\"" + fmt("%.2f", yp) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.2f", kLeft - 10) + "\" y=\"" + fmt("%.2f", yp + 4) +
           "\" text-anchor=\"end\">" + fmt("%.3g", v) + "</text>\n";
  }
  svg += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) + "\" y=\"" +
         fmt("%.1f", kSvgHeight - 20.0) + "\" text-anchor=\"middle\">" +
         escape(options.x_label) + "</text>\n";
  svg += "<text transform=\"translate(24," + fmt("%.1f", kTop + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + escape(options.y_label) + "</text>\n";
  svg += "</g>\n";

  for (std::size_t c = 0; c < series.size(); ++c) {
    const auto& s = series[c];
    const char* colour = kColours[c % std::size(kColours)];
    std::string pts;
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.xs.size(); ++i) {
      if (!std::isfinite(s.xs[i]) || !std::isfinite(s.ys[i])) continue;
      if (n++) pts += ' ';
      pts += fmt("%.3f", px(s.xs[i])) + "," + fmt("%.3f", py(s.ys[i]));
    }
    svg += "<polyline class=\"curve\" data-curve=\"" + std::to_string(c + 1) +
           "\" data-points=\"" + std::to_string(n) + "\" fill=\"none\" stroke=\"" + colour +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    const double ly = kTop + 20.0 + 22.0 * static_cast<double>(c);
    const double lx = kLeft + pw + 15.0;
    svg += "<line x1=\"" + fmt("%.1f", lx) + "\" y1=\"" + fmt("%.1f", ly) + "\" x2=\"" +
           fmt("%.1f", lx + 24) + "\" y2=\"" + fmt("%.1f", ly) + "\" stroke=\"" + colour +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt("%.1f", lx + 30) + "\" y=\"" + fmt("%.1f", ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace diamag::cli
