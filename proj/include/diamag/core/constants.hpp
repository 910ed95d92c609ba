#pragma once

// Gaussian CGS constants, CODATA 2018.

namespace diamag::cgs {

inline constexpr double kPi = 3.14159265358979323846;

// Elementary charge magnitude, statC (1.602176634e-19 C times c/10).
inline constexpr double kElementaryCharge = 4.803204712570263e-10;
// Reduced Planck constant, erg s.
inline constexpr double kHbar = 1.054571817e-27;
// Electron mass, g.
inline constexpr double kElectronMass = 9.1093837015e-28;
// Speed of light, cm/s.
inline constexpr double kSpeedOfLight = 2.99792458e10;

}  // namespace diamag::cgs
