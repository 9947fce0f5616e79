#include "qpt/freefermion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qpt/error.hpp"

namespace qpt {

double dispersion(const ModelParams& params, double k) {
  const double a = 1.0 - params.lambda * std::cos(k);
  const double b = params.gamma * params.lambda * std::sin(k);
  return std::hypot(a, b);
}

std::vector<double> contraction_breakpoints(const ModelParams& params) {
  const double pi = std::numbers::pi;
  const double gamma = params.gamma;
  const double lambda = params.lambda;
  std::vector<double> points{0.0, pi};

  // Minimum of Lambda_k away from k = 0: cos k = 1 / (lambda (1 - gamma^2)).
  if (gamma < 1.0) {
    const double c = 1.0 / (lambda * (1.0 - gamma * gamma));
    if (c < 1.0) points.push_back(std::acos(c));
  }
  // Near lambda = 1 the kernel varies on the scale |1 - lambda| around k = 0.
  const double offset = std::abs(1.0 - lambda);
  if (offset > 0.0 && offset < 0.1) {
    for (double k = offset; k < pi; k *= 4.0) points.push_back(k);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double contraction(const ModelParams& params, int distance, const QuadratureSettings& settings) {
  validate(params);
  if (distance < -2 || distance > 2) {
    throw Error(ErrorCode::InvalidArgument, "contraction distance must lie in [-2, 2], got " + std::to_string(distance));
  }
  const double gamma = params.gamma;
  const double lambda = params.lambda;
  const double r = distance;
  auto kernel = [&](double k) {
    const double energy = dispersion(params, k);
    if (energy == 0.0) return 0.0;
    const double numerator = std::cos(k * r) * (lambda * std::cos(k) - 1.0) + gamma * lambda * std::sin(k * r) * std::sin(k);
    return numerator / energy;
  };
  const auto points = contraction_breakpoints(params);
  const auto result = integrate<double>(kernel, std::span<const double>(points), settings);
  return result.value / std::numbers::pi;
}

CorrelatorSet correlators_thermo(const ModelParams& params, const QuadratureSettings& settings) {
  return {
      contraction(params, 0, settings),
      contraction(params, 1, settings),
      contraction(params, -1, settings),
      -contraction(params, 2, settings),
      -contraction(params, -2, settings),
  };
}

}  // namespace qpt
