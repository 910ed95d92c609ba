#pragma once

#include <string>
#include <vector>

#include "diamag/cli/config.hpp"

namespace diamag::cli {

struct CheckResult {
  std::string name;
  bool passed;
  double measured;
  double threshold;
  std::string detail;
};

// Default threshold of the closed-form vs quadrature grid check.
inline constexpr double kDefaultVerifyTol = 1e-8;

// Kernel vs quadrature (threshold tol), kinetic consistency, J integrals,
// Landau limit, static plateau and collisional suppression.
std::vector<CheckResult> run_verification(double tol, const Settings& settings);

std::string format_check(const CheckResult& check);

}  // namespace diamag::cli
