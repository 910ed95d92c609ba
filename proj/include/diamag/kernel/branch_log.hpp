#pragma once

#include "diamag/core/types.hpp"

namespace diamag::kernel {

// L(sigma) = ln((sigma - 1) / (sigma + 1)) as ln(sigma - 1) - ln(sigma + 1)
// with principal logarithms. This is the value of the integral of
// dt / (t - sigma) over [-1, 1] for Im(sigma) >= 0; a real sigma in (-1, 1)
// is read as approached from above, giving ln((1 - sigma) / (1 + sigma)) + i pi.
//
// Throws PoleError at sigma = +-1 and DomainError for Im(sigma) < 0.
Complex branch_log(Complex sigma);

}  // namespace diamag::kernel
