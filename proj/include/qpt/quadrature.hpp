#pragma once

// Globally adaptive 15-point Gauss-Kronrod integration with QUADPACK-style
// error estimates.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "qpt/error.hpp"

namespace qpt {

struct QuadratureSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
};

template <typename Real>
struct QuadratureResult {
  Real value;
  Real error;
  int intervals;
};

namespace detail {

template <typename Real>
struct Panel {
  Real lo, hi, value, error;
  Real floor;  // roundoff limit 50 eps int|f|
  friend bool operator<(const Panel& a, const Panel& b) { return a.error - a.floor < b.error - b.floor; }
};

template <typename Real, typename F>
Panel<Real> gauss_kronrod_15(F& f, Real lo, Real hi) {
  static constexpr Real xgk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr Real wgk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr Real wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                 0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  const Real center = (lo + hi) / 2;
  const Real half = (hi - lo) / 2;
  const Real f_center = f(center);
  Real kronrod = wgk[7] * f_center;
  Real gauss = wg[3] * f_center;
  Real abs_sum = std::abs(kronrod);
  Real fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const Real dx = half * xgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const Real pair = fv1[j] + fv2[j];
    kronrod += wgk[j] * pair;
    abs_sum += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) gauss += wg[j / 2] * pair;
  }
  const Real mean = kronrod / 2;
  Real asc = wgk[7] * std::abs(f_center - mean);
  for (int j = 0; j < 7; ++j) asc += wgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

  const Real width = std::abs(half);
  Real error = std::abs((kronrod - gauss) * half);
  asc *= width;
  abs_sum *= width;
  if (asc != 0 && error != 0) error = asc * std::min(Real(1), std::pow(200 * error / asc, Real(1.5)));
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  const Real floor = 50 * eps * abs_sum;
  if (abs_sum > std::numeric_limits<Real>::min() / (50 * eps)) error = std::max(floor, error);
  return {lo, hi, kronrod * half, error, floor};
}

}  // namespace detail

/// Integrates f over [breakpoints.front(), breakpoints.back()], starting from
/// one panel per breakpoint gap. Convergence is judged on the error in
/// excess of the accumulated roundoff floor. Throws QuadratureNonConvergence when the
/// error target is not met within max_subdivisions panels.
template <typename Real, typename F>
QuadratureResult<Real> integrate(F&& f, std::span<const Real> breakpoints, const QuadratureSettings& settings) {
  std::priority_queue<detail::Panel<Real>> panels;
  Real value = 0;
  Real error = 0;
  Real floor = 0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) continue;
    auto panel = detail::gauss_kronrod_15<Real>(f, breakpoints[i - 1], breakpoints[i]);
    value += panel.value;
    error += panel.error;
    floor += panel.floor;
    panels.push(panel);
  }
  auto target = [&] { return std::max<Real>(settings.abs_tol, settings.rel_tol * std::abs(value)); };
  int count = static_cast<int>(panels.size());
  while (error - floor > target()) {
    if (count >= settings.max_subdivisions || panels.empty()) {
      throw Error(ErrorCode::QuadratureNonConvergence,
                  "error estimate " + std::to_string(static_cast<double>(error)) + " after " +
                      std::to_string(count) + " panels");
    }
    const auto worst = panels.top();
    const Real mid = (worst.lo + worst.hi) / 2;
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw Error(ErrorCode::QuadratureNonConvergence, "panel width reached machine resolution");
    }
    panels.pop();
    auto left = detail::gauss_kronrod_15<Real>(f, worst.lo, mid);
    auto right = detail::gauss_kronrod_15<Real>(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    floor += left.floor + right.floor - worst.floor;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the drift of incremental updates.
  value = 0;
  error = 0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  return {value, error, count};
}

}  // namespace qpt
