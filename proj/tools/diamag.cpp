// Command-line front end: eval, sweep, figure1, verify.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "diamag/cli/commands.hpp"
#include "diamag/cli/verify.hpp"

using namespace diamag::cli;

namespace {

struct Common {
  std::string config;
};

void add_config(CLI::App* sub, Common& common) {
  sub->add_option("--config", common.config, "key=value settings file");
}

std::optional<double> optional_value(const CLI::Option* opt, double value) {
  if (opt->count() == 0) return std::nullopt;
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Susceptibility of a degenerate collisional plasma relative to Landau diamagnetism"};
  app.require_subcommand(1);
  Common common;

  EvalOptions eval;
  double eval_vf = 0.0;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate chi/chi_L at one point");
  eval_cmd->add_option("--x", eval.x, "omega / (k_F v_F)")->required();
  eval_cmd->add_option("--y", eval.y, "nu / (k_F v_F)")->required();
  eval_cmd->add_option("--q", eval.q, "k / k_F")->required();
  eval_cmd->add_flag("--json", eval.json, "Emit one JSON object");
  auto* eval_vf_opt = eval_cmd->add_option("--vf", eval_vf, "Fermi velocity in cm/s; absolute CGS output");
  add_config(eval_cmd, common);

  SweepOptions sweep;
  std::string axis = "q", spacing = "log";
  double sweep_vf = 0.0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one coordinate and write CSV");
  sweep_cmd->add_option("--axis", axis, "q, x or y")->capture_default_str();
  sweep_cmd->add_option("--min", sweep.spec.min)->capture_default_str();
  sweep_cmd->add_option("--max", sweep.spec.max)->capture_default_str();
  sweep_cmd->add_option("--points", sweep.spec.points)->capture_default_str();
  sweep_cmd->add_option("--spacing", spacing, "log or linear")->capture_default_str();
  sweep_cmd->add_option("--x", sweep.spec.x, "Fixed x when not swept")->capture_default_str();
  sweep_cmd->add_option("--y", sweep.spec.y, "Fixed y when not swept")->capture_default_str();
  sweep_cmd->add_option("--q", sweep.spec.q, "Fixed q when not swept")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "CSV path")->required();
  std::string sweep_svg;
  auto* sweep_svg_opt = sweep_cmd->add_option("--svg", sweep_svg, "SVG path");
  auto* sweep_vf_opt = sweep_cmd->add_option("--vf", sweep_vf, "Fermi velocity in cm/s");
  add_config(sweep_cmd, common);

  Figure1Options fig;
  std::string fig_svg;
  auto* fig_cmd = app.add_subcommand("figure1", "Four x = 0 curves, y = 1e-6 ... 1e-3");
  fig_cmd->add_option("--out", fig.out, "CSV path")->required();
  auto* fig_svg_opt = fig_cmd->add_option("--svg", fig_svg, "SVG path");
  add_config(fig_cmd, common);

  double tol = kDefaultVerifyTol;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the kernel against the oracles");
  verify_cmd->add_option("--tol", tol, "Threshold of the closed-form vs quadrature check")
      ->capture_default_str();
  add_config(verify_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Settings settings;
  try {
    if (!common.config.empty()) settings = load_config(common.config);
    if (eval_cmd->parsed()) {
      eval.v_fermi = optional_value(eval_vf_opt, eval_vf);
      return cmd_eval(eval, settings, std::cout, std::cerr);
    }
    if (sweep_cmd->parsed()) {
      sweep.spec.axis = parse_axis(axis);
      sweep.spec.spacing = parse_spacing(spacing);
      if (sweep_svg_opt->count()) sweep.svg = sweep_svg;
      sweep.v_fermi = optional_value(sweep_vf_opt, sweep_vf);
      return cmd_sweep(sweep, settings, std::cerr);
    }
    if (fig_cmd->parsed()) {
      if (fig_svg_opt->count()) fig.svg = fig_svg;
      return cmd_figure1(fig, settings, std::cerr);
    }
    if (verify_cmd->parsed()) return cmd_verify(tol, settings, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "error: config " << e.what() << '\n';
    return kExitUsage;
  } catch (const diamag::ValidationError& e) {
    std::cerr << "error: --" << e.what() << '\n';
    return kExitUsage;
  } catch (const diamag::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
