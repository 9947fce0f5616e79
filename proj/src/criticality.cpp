#include "qpt/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "parallel.hpp"
#include "qpt/error.hpp"
#include "qpt/freefermion.hpp"

namespace qpt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kOnCritical = 1e-12;
// Relative slack when checking fit windows, so generated grids pass exactly.
constexpr double kWindowSlack = 1e-9;

double base_step(const ModelParams& params) {
  const double offset = std::abs(params.lambda - kCriticalLambda);
  if (offset < kOnCritical) {
    throw Error(ErrorCode::StepCrossesCriticalPoint,
                "no finite-difference stencil fits at lambda = " + std::to_string(params.lambda));
  }
  return std::min({std::max(1e-5, 1e-3 * offset), offset / 4.0, params.lambda / 4.0});
}

struct RawDerivative {
  DerivativeEstimate estimate;
  bool precise;
};

// Richardson-extrapolated central differences for several observables that
// share one set of stencil correlators.
std::vector<RawDerivative> raw_derivatives(std::span<const Observable> observables, const ModelParams& params,
                                           const DerivativeOptions& options) {
  validate(params);
  const double s = base_step(params);
  const std::array<double, 3> steps{s, s / 2.0, s / 4.0};
  std::vector<std::array<double, 3>> central(observables.size());
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const double h = steps[j];
    const ModelParams up{params.gamma, params.lambda + h};
    const ModelParams down{params.gamma, params.lambda - h};
    const CorrelatorSet c_up = correlators_thermo(up, options.quadrature);
    const CorrelatorSet c_down = correlators_thermo(down, options.quadrature);
    for (std::size_t i = 0; i < observables.size(); ++i) {
      central[i][j] = (evaluate(observables[i], up, c_up) - evaluate(observables[i], down, c_down)) / (2.0 * h);
    }
  }
  std::vector<RawDerivative> out;
  out.reserve(observables.size());
  for (const auto& d : central) {
    const double r1a = (4.0 * d[1] - d[0]) / 3.0;
    const double r1b = (4.0 * d[2] - d[1]) / 3.0;
    const double r2 = (16.0 * r1b - r1a) / 15.0;
    const double tail = std::abs(r2 - r1b);
    out.push_back({{r2, s, tail}, tail <= options.precision_limit * std::max(1.0, std::abs(r2))});
  }
  return out;
}

void check_spec(const SweepSpec& spec) {
  validate(ModelParams{spec.gamma, spec.lambda_min});
  if (!(spec.lambda_max > spec.lambda_min)) {
    throw Error(ErrorCode::InvalidArgument, "lambda_max must exceed lambda_min");
  }
  if (spec.points < 2) {
    throw Error(ErrorCode::InvalidArgument, "a sweep needs at least 2 points");
  }
  if (spec.observables.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no observables requested");
  }
}

std::vector<double> geometric(double from, double to, int count) {
  std::vector<double> out;
  if (count <= 0) return out;
  if (count == 1) return {to};
  const double ratio = std::log(to / from) / (count - 1);
  for (int i = 0; i < count; ++i) out.push_back(from * std::exp(ratio * i));
  out.back() = to;
  return out;
}

struct LineFit {
  double slope;
  double intercept;
  double slope_error;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorCode::InsufficientPoints, "abscissae are all equal");
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (slope * x[i] + intercept);
    ssr += r * r;
  }
  return {slope, intercept, std::sqrt(ssr / (n - 2.0) / sxx)};
}

void check_window(std::span<const Sample> points, Side side, double lo, double hi, std::string_view law) {
  if (points.size() < 6) {
    throw Error(ErrorCode::InsufficientPoints,
                std::string(law) + " fit needs at least 6 points, got " + std::to_string(points.size()));
  }
  for (const auto& p : points) {
    const double offset = p.lambda - kCriticalLambda;
    const bool on_side = side == Side::Below ? offset < 0.0 : offset > 0.0;
    const double a = std::abs(offset);
    if (!on_side || a < lo * (1.0 - kWindowSlack) || a > hi * (1.0 + kWindowSlack) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::WindowViolation, "lambda = " + std::to_string(p.lambda) + " outside the " +
                                                  std::string(law) + " window on the " + std::string(name(side)) +
                                                  " side");
    }
  }
}

ScalingFit make_fit(Law law, Side side, std::span<const Sample> points, const LineFit& line) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& p : points) {
    lo = std::min(lo, std::abs(p.lambda - kCriticalLambda));
    hi = std::max(hi, std::abs(p.lambda - kCriticalLambda));
  }
  return {law, side, line.slope, line.intercept, line.slope_error, lo, hi, static_cast<int>(points.size())};
}

}  // namespace

std::vector<DerivativeEstimate> derivative_lambda(std::span<const Observable> observables, const ModelParams& params,
                                                  const DerivativeOptions& options) {
  std::vector<DerivativeEstimate> out;
  for (const auto& raw : raw_derivatives(observables, params, options)) {
    if (!raw.precise) {
      throw Error(ErrorCode::PrecisionLoss, "Richardson tail " + std::to_string(raw.estimate.error_estimate) +
                                                " at lambda = " + std::to_string(params.lambda));
    }
    out.push_back(raw.estimate);
  }
  return out;
}

DerivativeEstimate derivative_lambda(Observable observable, const ModelParams& params,
                                     const DerivativeOptions& options) {
  return derivative_lambda(std::span<const Observable>(&observable, 1), params, options).front();
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  check_spec(spec);
  std::vector<double> grid;
  if (spec.spacing == Spacing::Linear) {
    const double step = (spec.lambda_max - spec.lambda_min) / (spec.points - 1);
    for (int i = 0; i < spec.points; ++i) grid.push_back(spec.lambda_min + step * i);
    grid.back() = spec.lambda_max;
  } else {
    constexpr double kClosest = 1e-6;
    const double lc = kCriticalLambda;
    if (spec.lambda_max <= lc) {
      for (double d : geometric(lc - spec.lambda_min, std::max(lc - spec.lambda_max, kClosest), spec.points)) {
        grid.push_back(lc - d);
      }
    } else if (spec.lambda_min >= lc) {
      for (double d : geometric(std::max(spec.lambda_min - lc, kClosest), spec.lambda_max - lc, spec.points)) {
        grid.push_back(lc + d);
      }
    } else {
      const int below = spec.points / 2;
      for (double d : geometric(lc - spec.lambda_min, kClosest, below)) grid.push_back(lc - d);
      for (double d : geometric(kClosest, spec.lambda_max - lc, spec.points - below)) grid.push_back(lc + d);
    }
    std::sort(grid.begin(), grid.end());
  }
  if (spec.with_derivative) {
    std::erase_if(grid, [](double l) { return std::abs(l - kCriticalLambda) < kOnCritical; });
  }
  return grid;
}

int default_threads() {
  if (const char* env = std::getenv("QPT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepTable sweep(const SweepSpec& spec, int threads) {
  const auto grid = sweep_grid(spec);
  const auto& obs = spec.observables;
  SweepTable table(grid.size() * obs.size());
  detail::parallel_for(grid.size(), threads, [&](std::size_t p) {
    const ModelParams params{spec.gamma, grid[p]};
    auto row = [&](std::size_t i) -> SweepRow& { return table[p * obs.size() + i]; };
    for (std::size_t i = 0; i < obs.size(); ++i) {
      row(i) = {spec.gamma, grid[p], obs[i], kNaN, std::nullopt, {}};
      if (spec.with_derivative) row(i).dvalue_dlambda = kNaN;
    }
    try {
      const CorrelatorSet c = correlators_thermo(params);
      for (std::size_t i = 0; i < obs.size(); ++i) row(i).value = evaluate(obs[i], params, c);
    } catch (const Error& e) {
      for (std::size_t i = 0; i < obs.size(); ++i) row(i).error = e.what();
      return;
    }
    if (!spec.with_derivative) return;
    try {
      const auto derivs = raw_derivatives(obs, params, DerivativeOptions{});
      for (std::size_t i = 0; i < obs.size(); ++i) {
        if (derivs[i].precise) {
          row(i).dvalue_dlambda = derivs[i].estimate.value;
        } else {
          row(i).error = "PrecisionLoss: Richardson tail " + std::to_string(derivs[i].estimate.error_estimate);
        }
      }
    } catch (const Error& e) {
      for (std::size_t i = 0; i < obs.size(); ++i) row(i).error = e.what();
    }
  });
  return table;
}

std::string_view name(Law law) { return law == Law::Log ? "log" : "invsqrt"; }
std::string_view name(Side side) { return side == Side::Below ? "below" : "above"; }

ScalingFit fit_log_divergence(std::span<const Sample> points, Side side) {
  check_window(points, side, kLogWindow.min_offset, kLogWindow.max_offset, "log");
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& p : points) {
    x.push_back(std::log(std::abs(p.lambda - kCriticalLambda)));
    y.push_back(p.y);
  }
  return make_fit(Law::Log, side, points, least_squares(x, y));
}

ScalingFit fit_inverse_sqrt(std::span<const Sample> points) {
  check_window(points, Side::Above, kInvSqrtWindow.min_offset, kInvSqrtWindow.max_offset, "invsqrt");
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& p : points) {
    x.push_back(1.0 / std::sqrt(p.lambda * p.lambda - kCriticalLambda * kCriticalLambda));
    y.push_back(p.y);
  }
  return make_fit(Law::InvSqrt, Side::Above, points, least_squares(x, y));
}

std::vector<double> window_lambdas(const FitWindow& window, Side side) {
  std::vector<double> out;
  for (double d : geometric(window.min_offset, window.max_offset, window.points)) {
    out.push_back(side == Side::Below ? kCriticalLambda - d : kCriticalLambda + d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Sample> derivative_samples(Observable observable, double gamma, std::span<const double> lambdas,
                                       const DerivativeOptions& options) {
  std::vector<Sample> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) out.push_back({l, derivative_lambda(observable, ModelParams{gamma, l}, options).value});
  return out;
}

ScalingFit fit_observable(Observable observable, double gamma, Law law, Side side, std::optional<FitWindow> window) {
  if (law == Law::InvSqrt && side != Side::Above) {
    throw Error(ErrorCode::InvalidArgument, "the inverse-square-root law is fitted from above only");
  }
  const FitWindow w = window.value_or(law == Law::Log ? kLogWindow : kInvSqrtWindow);
  const auto lambdas = window_lambdas(w, side);
  const auto samples = derivative_samples(observable, gamma, lambdas);
  return law == Law::Log ? fit_log_divergence(samples, side) : fit_inverse_sqrt(samples);
}

TwoSidedFit fit_log_both_sides(Observable observable, double gamma, std::optional<FitWindow> window) {
  return {fit_observable(observable, gamma, Law::Log, Side::Below, window),
          fit_observable(observable, gamma, Law::Log, Side::Above, window)};
}

std::vector<CoefficientRow> coefficient_report(std::span<const double> gammas, int threads) {
  for (double g : gammas) {
    if (!(g > 0.0 && g <= 1.0)) {
      throw Error(ErrorCode::GammaOutOfRange, "coefficient report needs gamma in (0, 1], got " + std::to_string(g));
    }
  }
  const auto& obs = kGapAndAccelObservables;
  std::vector<CoefficientRow> rows(gammas.size());
  detail::parallel_for(gammas.size(), threads, [&](std::size_t r) {
    rows[r].gamma = gammas[r];
    std::array<std::array<std::vector<Sample>, 2>, 6> samples;
    std::array<std::string, 6> errors;
    try {
      for (Side side : {Side::Below, Side::Above}) {
        for (double l : window_lambdas(kLogWindow, side)) {
          const auto raw = raw_derivatives(obs, ModelParams{gammas[r], l}, DerivativeOptions{});
          for (std::size_t i = 0; i < obs.size(); ++i) {
            if (!raw[i].precise && errors[i].empty()) {
              errors[i] = "PrecisionLoss at lambda = " + std::to_string(l);
            }
            samples[i][static_cast<int>(side)].push_back({l, raw[i].estimate.value});
          }
        }
      }
    } catch (const Error& e) {
      errors.fill(e.what());
    }
    for (std::size_t i = 0; i < obs.size(); ++i) {
      auto& cell = rows[r].cells[i];
      if (!errors[i].empty()) {
        cell.error = errors[i];
        continue;
      }
      try {
        cell.fit = TwoSidedFit{fit_log_divergence(samples[i][0], Side::Below),
                               fit_log_divergence(samples[i][1], Side::Above)};
      } catch (const Error& e) {
        cell.error = e.what();
      }
    }
  });
  return rows;
}

}  // namespace qpt
