#include "diamag/kernel/branch_log.hpp"

#include <cmath>

#include "diamag/core/error.hpp"

namespace diamag::kernel {

Complex branch_log(Complex sigma) {
  if (!std::isfinite(sigma.real()) || !std::isfinite(sigma.imag())) {
    throw DomainError("branch_log: argument must be finite");
  }
  if (sigma.imag() < 0.0) {
    throw DomainError("branch_log: Im(sigma) < 0 is outside the upper half-plane");
  }
  if (sigma.imag() == 0.0 && (sigma.real() == 1.0 || sigma.real() == -1.0)) {
    throw PoleError("branch_log: logarithmic pole at sigma = +-1");
  }
  // Force +0 so a real argument in (-1, 1) picks up +i pi, not -i pi.
  const Complex w{sigma.real(), sigma.imag() + 0.0};
  if (std::abs(w) > 2.0) {
    // ln(1 + u), u = -2/(w + 1); the difference of two logs would lose |w| digits.
    const Complex u = -2.0 / (w + 1.0);
    const double re = 0.5 * std::log1p(u.real() * (2.0 + u.real()) + u.imag() * u.imag());
    return {re, std::atan2(u.imag(), 1.0 + u.real())};
  }
  return std::log(w - 1.0) - std::log(w + 1.0);
}

}  // namespace diamag::kernel
