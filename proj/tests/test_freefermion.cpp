#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qpt/error.hpp"
#include "qpt/exactdiag.hpp"
#include "qpt/extrapolate.hpp"
#include "qpt/freefermion.hpp"

namespace {

using namespace qpt;
constexpr double kPi = std::numbers::pi;

TEST(Dispersion, ZerosOnCriticalManifolds) {
  EXPECT_NEAR(dispersion({0.0, 2.0}, kPi / 3.0), 0.0, 1e-15);
  EXPECT_NEAR(dispersion({0.5, 1.0}, 0.0), 0.0, 1e-15);
  EXPECT_GT(dispersion({0.5, 1.3}, 0.0), 0.0);
  for (double k = 0.0; k <= kPi; k += 0.1) EXPECT_GE(dispersion({0.3, 0.7}, k), 0.0);
}

TEST(Contraction, FieldDominatedLimit) {
  for (double g : {0.0, 0.5, 1.0}) EXPECT_NEAR(contraction({g, 1e-8}, 0), -1.0, 1e-6);
}

TEST(Contraction, XXPolarizedPhaseHasNoTransverseOrder) {
  EXPECT_NEAR(contraction({0.0, 0.5}, 1), 0.0, 1e-10);
  EXPECT_NEAR(contraction({0.0, 0.5}, -1), 0.0, 1e-10);
}

TEST(Contraction, RejectsLongDistances) { EXPECT_THROW(contraction({0.5, 1.0}, 3), Error); }

// Orientation and signs fixed against the ED oracle: g_xx = g(+1), g_yy = g(-1).
TEST(Contraction, OrientationMatchesOracle) {
  std::vector<SizedValue> xx;
  std::vector<SizedValue> mz;
  for (int n : {8, 10, 12}) {
    const auto c = correlators_ed({1.0, 2.0}, n);
    xx.push_back({n, c.g_xx});
    mz.push_back({n, c.m_z});
  }
  const auto e = extrapolate_thermo(xx);
  EXPECT_NEAR(contraction({1.0, 2.0}, 1), e.estimate, std::max(1e-4, e.uncertainty));
  const auto m = extrapolate_thermo(mz);
  EXPECT_NEAR(contraction({1.0, 2.0}, 0), m.estimate, 1e-4);
}

TEST(CorrelatorsThermo, FieldDominatedLimit) {
  const auto c = correlators_thermo({1.0, 1e-8});
  EXPECT_NEAR(c.m_z, -1.0, 1e-6);
  for (double v : {c.g_xx, c.g_yy, c.g_xzx, c.g_yzy}) EXPECT_NEAR(v, 0.0, 1e-6);
}

TEST(CorrelatorsThermo, XXPolarizedPhase) {
  const auto c = correlators_thermo({0.0, 0.5});
  EXPECT_NEAR(c.m_z, -1.0, 1e-10);
  for (double v : {c.g_xx, c.g_yy, c.g_xzx, c.g_yzy}) EXPECT_NEAR(v, 0.0, 1e-10);
}

TEST(CorrelatorsThermo, AnisotropicOrderedPhaseMatchesOracle) {
  const ModelParams p{0.5, 1.5};
  std::vector<std::array<double, 5>> ed;
  for (int n : {8, 10, 12}) ed.push_back(correlators_ed(p, n).as_array());
  const auto t = correlators_thermo(p).as_array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    const std::vector<SizedValue> v{{8, ed[0][k]}, {10, ed[1][k]}, {12, ed[2][k]}};
    const auto e = extrapolate_thermo(v);
    EXPECT_NEAR(t[k], e.estimate, std::max(1e-4, e.uncertainty)) << kCorrelatorNames[k];
  }
}

// Closed forms for the XX chain above the transition, with k* = arccos(1/lambda):
// the Fermi sea fills |k| < k*.
TEST(CorrelatorsThermo, XXClosedForms) {
  for (double l : {1.5, 2.5, 4.0}) {
    const auto c = correlators_thermo({0.0, l});
    const double kstar = std::acos(1.0 / l);
    EXPECT_NEAR(c.m_z, 2.0 * kstar / kPi - 1.0, 1e-12);
    EXPECT_NEAR(c.g_xx, 2.0 / kPi * std::sqrt(1.0 - 1.0 / (l * l)), 1e-12);
    EXPECT_NEAR(c.g_xzx, -2.0 / kPi * std::sqrt(l * l - 1.0) / (l * l), 1e-12);
  }
}

TEST(CorrelatorsThermo, RotationalSymmetryAtGammaZero) {
  for (double l : {0.5, 1.5, 2.5}) {
    const auto c = correlators_thermo({0.0, l});
    EXPECT_NEAR(c.g_xx, c.g_yy, 1e-10);
    EXPECT_NEAR(c.g_xzx, c.g_yzy, 1e-10);
  }
}

TEST(CorrelatorsThermo, IsingStrongCouplingAsymptotics) {
  const auto a = correlators_thermo({1.0, 10.0});
  const auto b = correlators_thermo({1.0, 100.0});
  EXPECT_LT(std::abs(b.g_xx - 1.0), std::abs(a.g_xx - 1.0));
  EXPECT_LT(std::abs(b.m_z), std::abs(a.m_z));
  EXPECT_LT(std::abs(b.g_xx - 1.0), 1e-3);
}

TEST(CorrelatorsThermo, ContinuousAcrossTransition) {
  for (double g : {0.25, 0.5, 1.0}) {
    const auto below = correlators_thermo({g, 1.0 - 1e-7}).as_array();
    const auto at = correlators_thermo({g, 1.0}).as_array();
    const auto above = correlators_thermo({g, 1.0 + 1e-7}).as_array();
    for (std::size_t k = 0; k < at.size(); ++k) {
      EXPECT_NEAR(below[k], at[k], 1e-5);
      EXPECT_NEAR(above[k], at[k], 1e-5);
    }
  }
}

TEST(CorrelatorsThermo, FieldsAreBounded) {
  for (double g : {0.0, 0.3, 0.8, 1.0}) {
    for (double l : {0.1, 0.9, 1.1, 3.0}) {
      for (double v : correlators_thermo({g, l}).as_array()) {
        EXPECT_LE(std::abs(v), 1.0 + 1e-12);
      }
    }
  }
}

}  // namespace
