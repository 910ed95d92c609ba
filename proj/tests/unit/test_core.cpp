#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "diamag/core/constants.hpp"
#include "diamag/core/error.hpp"
#include "diamag/core/units.hpp"

using namespace diamag;

namespace {

// -e^2 v_F / (12 pi^2 hbar c^2) at v_F = 1.57e8 cm/s, 40-digit arithmetic
// with the CODATA 2018 Gaussian constants.
constexpr double kChiL157 = -3.226734909292844279778e-7;
// (3 pi^2 * 8.5e22)^(1/3)
constexpr double kKf85 = 1.360233005470662996601e8;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(DimensionlessPoint, AccessorsAndDerived) {
  const auto p = DimensionlessPoint::make(0.3, 0.2, 0.5);
  EXPECT_EQ(p.x(), 0.3);
  EXPECT_EQ(p.y(), 0.2);
  EXPECT_EQ(p.q(), 0.5);
  EXPECT_EQ(p.z(), Complex(0.3, 0.2));
  EXPECT_EQ(p.s(), Complex(0.3, 0.2) / 0.5);
  EXPECT_FALSE(p.is_static());
  EXPECT_TRUE(DimensionlessPoint::make(0.0, 0.0, 1.0).is_static());
}

TEST(DimensionlessPoint, RejectsBadFieldsByName) {
  auto field_of = [](double x, double y, double q) {
    try {
      DimensionlessPoint::make(x, y, q);
    } catch (const ValidationError& e) {
      return e.field();
    }
    return std::string("none");
  };
  EXPECT_EQ(field_of(-0.1, 0.1, 1.0), "x");
  EXPECT_EQ(field_of(0.0, -1.0, 1.0), "y");
  EXPECT_EQ(field_of(0.0, 0.1, 0.0), "q");
  EXPECT_EQ(field_of(0.0, std::numeric_limits<double>::quiet_NaN(), 1.0), "y");
  EXPECT_EQ(field_of(std::numeric_limits<double>::infinity(), 0.1, 1.0), "x");
  // Real pole inside [-1, 1] on the collisionless line.
  EXPECT_EQ(field_of(0.3, 0.0, 1.0), "y");
  // All poles outside: s = 5, s +- q/2 = 5 +- 0.1.
  EXPECT_EQ(field_of(1.0, 0.0, 0.2), "none");
}

TEST(DimensionlessPoint, NegativeZeroIsCanonical) {
  const auto p = DimensionlessPoint::make(-0.0, 0.1, 1.0);
  EXPECT_FALSE(std::signbit(p.x()));
}

TEST(Units, ToDimensionlessDefinitions) {
  const double vf = 1e8;
  const double kf = fermi_wavenumber(vf);
  EXPECT_DOUBLE_EQ(kf, cgs::kElectronMass * vf / cgs::kHbar);

  const auto p = to_dimensionless({vf, 0.0, 0.0, kf});
  EXPECT_EQ(p.x(), 0.0);
  EXPECT_EQ(p.y(), 0.0);
  EXPECT_NEAR(p.q(), 1.0, 1e-15);

  const auto p2 = to_dimensionless({vf, kf * vf, 0.0, 0.5 * kf});
  EXPECT_NEAR(p2.y(), 1.0, 1e-15);
  EXPECT_NEAR(p2.q(), 0.5, 1e-15);
}

TEST(Units, StateValidationNamesField) {
  try {
    to_dimensionless({1e8, -1.0, 0.0, 1.0});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "nu");
  }
  EXPECT_THROW(to_dimensionless({0.0, 0.0, 0.0, 1.0}), ValidationError);
  EXPECT_THROW(to_dimensionless({1e8, 0.0, -1.0, 1.0}), ValidationError);
  EXPECT_THROW(to_dimensionless({1e8, 0.0, 0.0, 0.0}), ValidationError);
}

TEST(Units, RoundTripThousandStates) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double vf = std::pow(10.0, 7.0 + 2.0 * u(rng));
    const double kf = fermi_wavenumber(vf);
    const PhysicalState s{vf, kf * vf * std::pow(10.0, -8.0 + 8.0 * u(rng)),
                          kf * vf * std::pow(10.0, -6.0 + 6.5 * u(rng)),
                          kf * std::pow(10.0, -7.0 + 7.3 * u(rng))};
    const auto back = from_dimensionless(to_dimensionless(s), vf);
    EXPECT_LE(rel(back.v_fermi, s.v_fermi), 1e-14);
    EXPECT_LE(rel(back.nu, s.nu), 1e-14);
    EXPECT_LE(rel(back.omega, s.omega), 1e-14);
    EXPECT_LE(rel(back.k, s.k), 1e-14);
  }
}

TEST(Units, FermiParametersFromDensity) {
  const auto f = fermi_parameters_from_density(8.5e22);
  EXPECT_LE(rel(f.k_fermi, kKf85), 1e-14);
  EXPECT_LE(rel(f.v_fermi, cgs::kHbar * f.k_fermi / cgs::kElectronMass), 1e-15);
  EXPECT_LE(rel(f.p_fermi, cgs::kElectronMass * f.v_fermi), 1e-15);
  EXPECT_LE(rel(f.e_fermi, 0.5 * cgs::kElectronMass * f.v_fermi * f.v_fermi), 1e-15);

  // k_F = 1 cm^-1 gives v_F = hbar / m.
  const auto unit = fermi_parameters_from_density(1.0 / (3.0 * cgs::kPi * cgs::kPi));
  EXPECT_LE(rel(unit.k_fermi, 1.0), 1e-15);
  EXPECT_LE(rel(unit.v_fermi, cgs::kHbar / cgs::kElectronMass), 1e-15);

  const auto doubled = fermi_parameters_from_density(1.7e23);
  EXPECT_LE(rel(doubled.k_fermi / f.k_fermi, std::cbrt(2.0)), 1e-15);
  EXPECT_THROW(fermi_parameters_from_density(0.0), ValidationError);
}

TEST(Units, LandauConstant) {
  EXPECT_LE(rel(landau_chi_physical(1.57e8), kChiL157), 1e-12);
  EXPECT_LT(landau_chi_physical(1e8), 0.0);
  EXPECT_LE(rel(landau_chi_physical(2 * 1.57e8), 2 * landau_chi_physical(1.57e8)), 1e-15);
  for (double vf = 1e7; vf <= 1e9; vf *= 1.7) {
    EXPECT_LE(rel(landau_chi_textbook(vf), landau_chi_physical(vf)), 1e-12) << vf;
  }
  EXPECT_THROW(landau_chi_physical(-1.0), ValidationError);
}

TEST(Units, RatioToAbsolute) {
  const double chi_l = landau_chi_physical(1.57e8);
  EXPECT_EQ(chi_ratio_to_absolute(1.0, 1.57e8), Complex(chi_l));
  EXPECT_EQ(chi_ratio_to_absolute(0.0, 1.57e8), Complex(0.0));
  EXPECT_LE(rel(chi_ratio_to_absolute(0.948, 1.57e8).real(), -3.058944694009616377e-7), 1e-12);
}

TEST(ChiResult, TotalIsSumOfParts) {
  const auto r = ChiResult::from_parts({1.25, -0.5}, {0.125, 3.0}, Method::ClosedForm, 0.0);
  EXPECT_EQ(r.total, Complex(1.375, 2.5));
  EXPECT_EQ(to_string(Method::SeriesSmallQ), "series-small-q");
  EXPECT_EQ(to_string(Method::PvStatic), "pv-static");
}
