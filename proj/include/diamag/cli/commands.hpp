#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "diamag/cli/config.hpp"
#include "diamag/cli/sweep.hpp"

namespace diamag::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

struct EvalOptions {
  double x = 0.0;
  double y = 0.0;
  double q = 1.0;
  bool json = false;
  std::optional<double> v_fermi;
};

struct SweepOptions {
  SweepSpec spec;
  std::string out;
  std::optional<std::string> svg;
  std::optional<double> v_fermi;
};

struct Figure1Options {
  std::string out;
  std::optional<std::string> svg;
};

inline constexpr double kFigure1Y[] = {1e-6, 1e-5, 1e-4, 1e-3};
inline constexpr double kFigure1QMin = 1e-7;
inline constexpr double kFigure1QMax = 2.0;
inline constexpr int kFigure1Points = 400;

int cmd_eval(const EvalOptions& options, const Settings& settings, std::ostream& out,
             std::ostream& err);
int cmd_sweep(const SweepOptions& options, const Settings& settings, std::ostream& err);
int cmd_figure1(const Figure1Options& options, const Settings& settings, std::ostream& err);
int cmd_verify(double tol, const Settings& settings, std::ostream& out);

}  // namespace diamag::cli
