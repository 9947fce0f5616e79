#include "qpt/extrapolate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qpt/error.hpp"

namespace qpt {

namespace {

// q(r) = r^{d1} (1 - r^{d2}) / (1 - r^{d1}) increases from 0 to d2/d1 on (0, 1).
double solve_ratio(double q, int d1, int d2) {
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double r = 0.5 * (lo + hi);
    const double value = std::pow(r, d1) * (1.0 - std::pow(r, d2)) / (1.0 - std::pow(r, d1));
    (value < q ? lo : hi) = r;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Extrapolation extrapolate_thermo(std::span<const SizedValue> values) {
  if (values.size() < 3) {
    throw Error(ErrorCode::InsufficientPoints, "need at least three sizes");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].sites <= values[i - 1].sites) {
      throw Error(ErrorCode::InsufficientPoints, "sizes must be distinct and ascending");
    }
  }
  const auto& p1 = values[values.size() - 3];
  const auto& p2 = values[values.size() - 2];
  const auto& p3 = values[values.size() - 1];
  const double d1 = p2.value - p1.value;
  const double d2 = p3.value - p2.value;
  const double scale = std::max({1.0, std::abs(p1.value), std::abs(p2.value), std::abs(p3.value)});
  const double flat = 4.0 * std::numeric_limits<double>::epsilon() * scale;

  if (std::abs(d1) <= flat && std::abs(d2) <= flat) {
    return {p3.value, 0.0, ExtrapolationMethod::Geometric};
  }

  const int step1 = p2.sites - p1.sites;
  const int step2 = p3.sites - p2.sites;
  if (std::abs(d1) > flat) {
    const double q = d2 / d1;
    double tail = 0.0;  // r^{step2}
    bool ok = false;
    if (step1 == step2 && std::abs(q) < 1.0) {
      tail = q;
      ok = true;
    } else if (q > 0.0 && q < static_cast<double>(step2) / step1) {
      tail = std::pow(solve_ratio(q, step1, step2), step2);
      ok = true;
    }
    if (ok) {
      const double estimate = p3.value + d2 * tail / (1.0 - tail);
      return {estimate, std::abs(estimate - p3.value), ExtrapolationMethod::Geometric};
    }
    // Growing sign-alternating differences: the sequence oscillates about
    // its limit, so bracket it by the last two values instead of extrapolating.
    if (q < 0.0) {
      const double estimate = 0.5 * (p2.value + p3.value);
      return {estimate, std::abs(estimate - p3.value), ExtrapolationMethod::Bracket};
    }
  }

  const double estimate = (p3.sites * p3.value - p2.sites * p2.value) / (p3.sites - p2.sites);
  return {estimate, std::abs(estimate - p3.value), ExtrapolationMethod::Richardson};
}

}  // namespace qpt
