#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qpt/error.hpp"
#include "qpt/extrapolate.hpp"
#include "qpt/quadrature.hpp"

namespace {

using namespace qpt;

QuadratureResult<double> run(auto f, std::vector<double> points, QuadratureSettings s = {}) {
  return integrate<double>(f, std::span<const double>(points), s);
}

TEST(Quadrature, SmoothIntegrand) {
  const auto r = run([](double x) { return std::sin(x); }, {0.0, std::numbers::pi});
  EXPECT_NEAR(r.value, 2.0, 1e-14);
  EXPECT_LE(r.error, 1e-12);
}

TEST(Quadrature, EndpointSingularity) {
  EXPECT_NEAR(run([](double x) { return std::sqrt(x); }, {0.0, 1.0}).value, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(run([](double x) { return 1.0 / std::sqrt(x); }, {0.0, 1.0}).value, 2.0, 1e-10);
}

TEST(Quadrature, KinkAtBreakpoint) {
  const auto f = [](double x) { return std::abs(x - 0.3); };
  const auto r = run(f, {0.0, 0.3, 1.0});
  EXPECT_NEAR(r.value, 0.045 + 0.245, 1e-14);
  EXPECT_EQ(r.intervals, 2);
}

TEST(Quadrature, ReportsNonConvergence) {
  QuadratureSettings tight{1e-15, 1e-15, 4};
  try {
    run([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3137)); }, {0.0, 1.0}, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QuadratureNonConvergence);
  }
}

std::vector<SizedValue> series(std::initializer_list<double> values, int first = 8, int step = 2) {
  std::vector<SizedValue> out;
  int n = first;
  for (double v : values) {
    out.push_back({n, v});
    n += step;
  }
  return out;
}

TEST(Extrapolate, ConstantSeries) {
  const auto e = extrapolate_thermo(series({0.37, 0.37, 0.37}));
  EXPECT_EQ(e.estimate, 0.37);
  EXPECT_EQ(e.uncertainty, 0.0);
}

TEST(Extrapolate, GeometricSeriesIsExact) {
  const double c = -0.4123;
  std::vector<SizedValue> v;
  for (int n : {8, 10, 12}) v.push_back({n, c + std::pow(2.0, -n)});
  const auto e = extrapolate_thermo(v);
  EXPECT_NEAR(e.estimate, c, 1e-12);
  EXPECT_EQ(e.method, ExtrapolationMethod::Geometric);
  EXPECT_NEAR(e.uncertainty, std::pow(2.0, -12), 1e-12);
}

TEST(Extrapolate, UnequalSpacingGeometric) {
  const double c = 0.25;
  std::vector<SizedValue> v;
  for (int n : {6, 9, 10}) v.push_back({n, c + 0.3 * std::pow(0.7, n)});
  EXPECT_NEAR(extrapolate_thermo(v).estimate, c, 1e-10);
}

TEST(Extrapolate, AlgebraicSeriesFallsBackToRichardson) {
  // Same-sign differences that grow rule out a contracting geometric law.
  const auto e = extrapolate_thermo(series({1.0 + 1.0 / 8, 1.0 + 1.0 / 10, 1.0 + 1.0 / 100}, 8, 2));
  EXPECT_EQ(e.method, ExtrapolationMethod::Richardson);
}

TEST(Extrapolate, GrowingOscillationIsBracketed) {
  const auto e = extrapolate_thermo(series({0.50, 0.49, 0.515}));
  EXPECT_EQ(e.method, ExtrapolationMethod::Bracket);
  EXPECT_NEAR(e.estimate, 0.5025, 1e-15);
  EXPECT_NEAR(e.uncertainty, 0.0125, 1e-15);
}

TEST(Extrapolate, RejectsBadInput) {
  EXPECT_THROW(extrapolate_thermo(series({1.0, 2.0})), Error);
  std::vector<SizedValue> unsorted{{10, 1.0}, {8, 1.0}, {12, 1.0}};
  EXPECT_THROW(extrapolate_thermo(unsorted), Error);
}

}  // namespace
