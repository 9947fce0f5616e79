#include <gtest/gtest.h>

#include <random>

#include "qpt/error.hpp"
#include "qpt/freefermion.hpp"
#include "qpt/observables.hpp"
#include "qpt/verify.hpp"

namespace {

using namespace qpt;

constexpr CorrelatorSet kPolarized{-1.0, 0.0, 0.0, 0.0, 0.0};

TEST(Gaps, ProductStateCorrelators) {
  for (double l : {0.1, 1.0, 7.0}) {
    const GapSet g = gaps_from_correlators({1.0, l}, kPolarized);
    EXPECT_DOUBLE_EQ(g.de_x, 2.0);
    EXPECT_DOUBLE_EQ(g.de_y, 2.0);
    EXPECT_DOUBLE_EQ(g.de_z, 0.0);
  }
  const GapSet xx = gaps_from_correlators({0.0, 0.5}, kPolarized);
  EXPECT_DOUBLE_EQ(xx.de_x, 2.0);
  EXPECT_DOUBLE_EQ(xx.de_z, 0.0);
}

TEST(Accels, XXPolarizedPhase) {
  const AccelSet a = accels_from_correlators({0.0, 0.5}, kPolarized);
  EXPECT_DOUBLE_EQ(a.lam_x, 1.0);
  EXPECT_DOUBLE_EQ(a.lam_y, 1.0);
  EXPECT_DOUBLE_EQ(a.lam_z, 0.0);
}

TEST(Accels, RequirePositiveLambda) {
  EXPECT_THROW(accels_from_correlators({0.5, 0.0}, kPolarized), Error);
  EXPECT_THROW(gaps_from_correlators({0.5, -1.0}, kPolarized), Error);
}

TEST(Accels, AnisotropicThermodynamicFixture) {
  const ModelParams p{0.5, 2.0};
  const AccelSet a = accels_from_correlators(p, correlators_thermo(p));
  EXPECT_NEAR(a.lam_x, 0.786714395241797, 1e-11);
  EXPECT_NEAR(a.lam_y, 0.175370001790452, 1e-11);
  EXPECT_NEAR(a.lam_z, -0.517099021391406, 1e-11);
}

CorrelatorSet random_set(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng), u(rng)};
}

TEST(Observables, LinearInCorrelators) {
  std::mt19937 rng(3);
  const ModelParams p{0.37, 1.9};
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_set(rng);
    const auto b = random_set(rng);
    const double s = 0.3;
    const auto mix = a + s * b;
    for (auto o : kGapAndAccelObservables) {
      // Linear maps without offset.
      EXPECT_NEAR(evaluate(o, p, mix), evaluate(o, p, a) + s * evaluate(o, p, b), 1e-13);
    }
  }
}

TEST(Observables, GapSumRule) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_set(rng);
    const ModelParams p{0.1 * trial / 2.0, 0.2 + 0.1 * trial};
    const GapSet g = gaps_from_correlators(p, c);
    EXPECT_NEAR(g.de_x + g.de_y, g.de_z - 4.0 * c.m_z, 1e-13);
  }
}

TEST(Observables, GammaZeroReduction) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = random_set(rng);
    c.g_yy = c.g_xx;
    c.g_yzy = c.g_xzx;
    const ModelParams p{0.0, 0.4 + trial * 0.3};
    const AccelSet a = accels_from_correlators(p, c);
    EXPECT_NEAR(a.lam_x, a.lam_y, 1e-15);
    EXPECT_NEAR(a.lam_z, c.g_xzx, 1e-15);
    EXPECT_NEAR(a.lam_x, -c.m_z - c.g_xzx / 2.0, 1e-15);
    const GapSet g = gaps_from_correlators(p, c);
    EXPECT_NEAR(g.de_x, g.de_y, 1e-15);
  }
}

TEST(Observables, NamesRoundTrip) {
  for (auto o : kGapAndAccelObservables) EXPECT_EQ(parse_observable(name(o)), o);
  for (auto o : kCorrelatorObservables) EXPECT_EQ(parse_observable(name(o)), o);
  EXPECT_EQ(parse_observable("dLz"), Observable::AccelZ);
  EXPECT_FALSE(parse_observable("dQx").has_value());
}

TEST(Verify, IdentitySuiteIsSeedReproducible) {
  const SuiteReport a = verify_identities(kDefaultSeed, 12, 8, 1);
  const SuiteReport b = verify_identities(kDefaultSeed, 12, 8, 3);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  EXPECT_TRUE(a.passed());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].measured, b.checks[i].measured);
    EXPECT_EQ(a.checks[i].detail, b.checks[i].detail);
  }
}

TEST(Verify, SymmetrySuitePasses) {
  const SuiteReport r = verify_symmetry(8);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.measured;
}

}  // namespace
