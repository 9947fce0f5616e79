#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpt/model.hpp"
#include "qpt/observables.hpp"
#include "qpt/quadrature.hpp"

namespace qpt {

/// Fit anchor; never estimated.
inline constexpr double kCriticalLambda = 1.0;

struct DerivativeEstimate {
  double value;
  double step_used;
  double error_estimate;
};

struct DerivativeOptions {
  QuadratureSettings quadrature{1e-13, 1e-13, 4000};
  double precision_limit = 1e-5;
};

/// d/dlambda of thermodynamic-limit observables: central differences at steps
/// s, s/2, s/4 combined by two Richardson levels, with
/// s = min(max(1e-5, 1e-3 |lambda - 1|), |lambda - 1| / 4, lambda / 4).
/// Throws StepCrossesCriticalPoint at lambda = 1, PrecisionLoss when the
/// Richardson tail exceeds options.precision_limit * max(1, |value|).
std::vector<DerivativeEstimate> derivative_lambda(std::span<const Observable> observables, const ModelParams& params,
                                                  const DerivativeOptions& options = {});
DerivativeEstimate derivative_lambda(Observable observable, const ModelParams& params,
                                     const DerivativeOptions& options = {});

enum class Spacing { Linear, LogTowardCritical };

struct SweepSpec {
  double gamma = 1.0;
  double lambda_min = 0.5;
  double lambda_max = 1.5;
  int points = 101;
  Spacing spacing = Spacing::Linear;
  std::vector<Observable> observables;
  bool with_derivative = false;
};

struct SweepRow {
  double gamma;
  double lambda;
  Observable observable;
  double value;                         // NaN when the point failed
  std::optional<double> dvalue_dlambda;  // empty without derivative; NaN when failed
  std::string error;                     // empty on success
};

using SweepTable = std::vector<SweepRow>;

/// Sample abscissae, ascending. Log spacing puts points at 1 -+ delta with
/// delta geometric down to 1e-6 on each side of lambda_c the range touches.
/// With derivatives requested, lambda_c itself is never sampled.
std::vector<double> sweep_grid(const SweepSpec& spec);

/// Worker count from QPT_THREADS, else hardware concurrency.
int default_threads();

/// Per-point failures become error rows; the sweep itself only throws on an
/// invalid spec.
SweepTable sweep(const SweepSpec& spec, int threads = default_threads());

enum class Law { Log, InvSqrt };
enum class Side { Below, Above };

std::string_view name(Law law);
std::string_view name(Side side);

struct Sample {
  double lambda;
  double y;
};

struct ScalingFit {
  Law law;
  Side side;
  double coefficient;
  double intercept;
  double std_error;
  double window_min;  // min |lambda - 1|
  double window_max;  // max |lambda - 1|
  int n_points;
};

struct FitWindow {
  double min_offset;
  double max_offset;
  int points = 25;
};

inline constexpr FitWindow kLogWindow{1e-6, 1e-2, 25};
inline constexpr FitWindow kInvSqrtWindow{1e-4, 1e-2, 25};

/// Least squares y = c ln|lambda - 1| + b; needs >= 6 points strictly on
/// `side` with |lambda - 1| in [1e-6, 1e-2].
ScalingFit fit_log_divergence(std::span<const Sample> points, Side side);

/// Least squares y = d (lambda^2 - 1)^{-1/2} + b; needs >= 6 points with
/// lambda - 1 in [1e-4, 1e-2].
ScalingFit fit_inverse_sqrt(std::span<const Sample> points);

/// Geometrically spaced lambdas at 1 -+ offset.
std::vector<double> window_lambdas(const FitWindow& window, Side side);

/// (lambda, d observable / d lambda) over a window, via derivative_lambda.
std::vector<Sample> derivative_samples(Observable observable, double gamma, std::span<const double> lambdas,
                                       const DerivativeOptions& options = {});

/// Fit of the derivative of `observable` at `gamma` on the standard window for `law`.
ScalingFit fit_observable(Observable observable, double gamma, Law law, Side side,
                          std::optional<FitWindow> window = std::nullopt);

struct TwoSidedFit {
  ScalingFit below;
  ScalingFit above;
  const ScalingFit& best() const { return below.std_error <= above.std_error ? below : above; }
};

TwoSidedFit fit_log_both_sides(Observable observable, double gamma, std::optional<FitWindow> window = std::nullopt);

struct CoefficientCell {
  std::optional<TwoSidedFit> fit;
  std::string error;
};

/// Log-law coefficients c_x, c_y, c_z (gaps) and d_x, d_y, d_z (accelerations).
struct CoefficientRow {
  double gamma;
  std::array<CoefficientCell, 6> cells;  // order of kGapAndAccelObservables
};

std::vector<CoefficientRow> coefficient_report(std::span<const double> gammas, int threads = default_threads());

}  // namespace qpt
