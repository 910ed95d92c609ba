#include "diamag/cli/sweep.hpp"

#include <cmath>
#include <string>

#include "diamag/core/error.hpp"

namespace diamag::cli {

Axis parse_axis(std::string_view name) {
  if (name == "q") return Axis::Q;
  if (name == "x") return Axis::X;
  if (name == "y") return Axis::Y;
  throw ValidationError("axis", "expected q, x or y, got '" + std::string(name) + "'");
}

Spacing parse_spacing(std::string_view name) {
  if (name == "log") return Spacing::Log;
  if (name == "linear") return Spacing::Linear;
  throw ValidationError("spacing", "expected log or linear, got '" + std::string(name) + "'");
}

std::string_view to_string(Axis axis) noexcept {
  switch (axis) {
    case Axis::Q: return "q";
    case Axis::X: return "x";
    case Axis::Y: return "y";
  }
  return "?";
}

namespace {

std::vector<double> axis_values(const SweepSpec& s) {
  std::vector<double> v(static_cast<std::size_t>(s.points));
  const double n = s.points - 1;
  for (int i = 0; i < s.points; ++i) {
    const double t = i / n;
    if (s.spacing == Spacing::Log) {
      v[i] = std::exp(std::log(s.min) + t * (std::log(s.max) - std::log(s.min)));
    } else {
      v[i] = s.min + t * (s.max - s.min);
    }
  }
  v.front() = s.min;
  v.back() = s.max;
  return v;
}

kernel::GridPoint place(const SweepSpec& s, double value) {
  kernel::GridPoint p{s.x, s.y, s.q};
  switch (s.axis) {
    case Axis::Q: p.q = value; break;
    case Axis::X: p.x = value; break;
    case Axis::Y: p.y = value; break;
  }
  return p;
}

}  // namespace

void SweepSpec::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw ValidationError("min", "sweep bounds must be finite");
  }
  if (!(min < max)) throw ValidationError("min", "must be < max");
  if (points < 2) throw ValidationError("points", "must be >= 2");
  if (spacing == Spacing::Log && !(min > 0.0)) {
    throw ValidationError("min", "log spacing requires min > 0");
  }
  for (double v : axis_values(*this)) {
    const auto p = place(*this, v);
    DimensionlessPoint::make(p.x, p.y, p.q);
  }
}

std::vector<kernel::GridPoint> SweepSpec::generate() const {
  validate();
  std::vector<kernel::GridPoint> out;
  for (double v : axis_values(*this)) out.push_back(place(*this, v));
  return out;
}

}  // namespace diamag::cli
