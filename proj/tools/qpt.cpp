// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input validation, 3 numerical failure.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpt/criticality.hpp"
#include "qpt/error.hpp"
#include "qpt/exactdiag.hpp"
#include "qpt/freefermion.hpp"
#include "qpt/observables.hpp"
#include "qpt/output.hpp"
#include "qpt/verify.hpp"

namespace {

using namespace qpt;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct PointArgs {
  double gamma = 1.0;
  double lambda = 0.5;
  int size = 0;
  bool thermo = false;
};

void add_point_options(CLI::App* cmd, PointArgs& a) {
  cmd->add_option("--gamma", a.gamma, "anisotropy in [0, 1]")->required();
  cmd->add_option("--lambda", a.lambda, "reduced coupling J/h > 0")->required();
  auto* size = cmd->add_option("--size", a.size, "finite ring length N");
  auto* thermo = cmd->add_flag("--thermo", a.thermo, "thermodynamic limit via quadrature");
  size->excludes(thermo);
}

bool finite(const PointArgs& a) {
  if (!a.thermo && a.size == 0) {
    throw Error(ErrorCode::InvalidArgument, "choose --size N or --thermo");
  }
  return !a.thermo;
}

JsonRecord point_header(const char* command, const PointArgs& a) {
  JsonRecord r;
  r.set("command", command).set("gamma", a.gamma).set("lambda", a.lambda);
  if (a.thermo) {
    r.set("provenance", "quadrature");
  } else {
    r.set("provenance", "ed").set("sites", a.size);
  }
  return r;
}

CorrelatorSet point_correlators(const ModelParams& p, const PointArgs& a) {
  if (finite(a)) {
    validate(p, FiniteChain{a.size});
    return correlators_ed(p, a.size);
  }
  validate(p);
  return correlators_thermo(p);
}

int run_correlators(const PointArgs& a) {
  const ModelParams p{a.gamma, a.lambda};
  const CorrelatorSet c = point_correlators(p, a);
  JsonRecord r = point_header("correlators", a);
  const auto values = c.as_array();
  for (std::size_t i = 0; i < values.size(); ++i) r.set(std::string(kCorrelatorNames[i]), values[i]);
  r.set("schema_version", kSchemaVersion).write(std::cout);
  return kExitOk;
}

// Gaps or accelerations: formula value, plus direct definition on a finite ring.
int run_observable_set(const PointArgs& a, bool gaps) {
  const ModelParams p{a.gamma, a.lambda};
  JsonRecord r = point_header(gaps ? "gaps" : "accel", a);
  const char* prefix = gaps ? "de_" : "lam_";
  auto formula = [&](const CorrelatorSet& c, Axis axis) {
    return gaps ? gaps_from_correlators(p, c)[axis] : accels_from_correlators(p, c)[axis];
  };
  if (finite(a)) {
    validate(p, FiniteChain{a.size});
    const DenseSpectrum spectrum(p, a.size);
    const CorrelatorSet c = correlators_of(spectrum.ground_state(), a.size);
    for (Axis axis : kAllAxes) {
      const std::string key = prefix + std::string(1, axis_char(axis));
      const double f = formula(c, axis);
      const double d = gaps ? gap_direct(spectrum, axis) : accel_direct(spectrum, axis);
      r.set(key, f).set(key + "_direct", d).set(key + "_difference", f - d);
    }
  } else {
    validate(p);
    const CorrelatorSet c = correlators_thermo(p);
    for (Axis axis : kAllAxes) r.set(prefix + std::string(1, axis_char(axis)), formula(c, axis));
  }
  r.set("schema_version", kSchemaVersion).write(std::cout);
  return kExitOk;
}

struct DynamicsArgs {
  double gamma = 1.0;
  double lambda = 0.5;
  int size = 10;
  std::string axis = "x";
  double tau_max = 0.0;  // 0 means 0.01 / lambda
  int steps = 20;
};

int run_dynamics(const DynamicsArgs& a) {
  const ModelParams p{a.gamma, a.lambda};
  validate(p, FiniteChain{a.size});
  const Axis axis = parse_axis(a.axis);
  if (a.steps < 3) {
    // Reported as a usage error: the fit needs three distinct times.
    std::cerr << "InsufficientPoints: --steps must be at least 3, got " << a.steps << '\n';
    return kExitValidation;
  }
  const double tau_max = a.tau_max > 0.0 ? a.tau_max : 0.01 / a.lambda;
  if (a.lambda * tau_max > 0.05) {
    throw Error(ErrorCode::InvalidArgument, "lambda * tau_max must not exceed 0.05");
  }
  std::vector<double> taus;
  for (int i = 0; i < a.steps; ++i) taus.push_back(tau_max * i / (a.steps - 1));
  const DenseSpectrum spectrum(p, a.size);
  const auto series = short_time_series(spectrum, axis, taus);
  const ShortTimeFit fit = fit_short_time(series, a.lambda);
  const double accel = accel_direct(spectrum, axis);
  const double prediction = -4.0 * accel * a.lambda * a.lambda;

  JsonRecord::Array rows;
  for (const auto& s : series) rows.push_back({s.tau, s.m_z});
  JsonRecord r;
  r.set("command", "dynamics")
      .set("gamma", a.gamma)
      .set("lambda", a.lambda)
      .set("sites", a.size)
      .set("axis", std::string(1, axis_char(axis)))
      .set("series", rows)
      .set("fit_points", fit.n_points)
      .set("quadratic", fit.quadratic)
      .set("quartic", fit.quartic)
      .set("acceleration", accel)
      .set("prediction", prediction)
      .set("relative_difference", prediction != 0.0 ? (fit.quadratic - prediction) / std::abs(prediction)
                                                    : fit.quadratic)
      .set("schema_version", kSchemaVersion)
      .write(std::cout);
  return kExitOk;
}

struct SweepArgs {
  double gamma = 1.0;
  double lambda_min = 0.5;
  double lambda_max = 1.5;
  int points = 101;
  std::string spacing = "linear";
  std::string observables = "dEx,dEy,dEz";
  bool derivative = false;
  std::string output;
};

std::vector<Observable> parse_observable_list(const std::string& text) {
  std::vector<Observable> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "correlators") {
      out.insert(out.end(), kCorrelatorObservables.begin(), kCorrelatorObservables.end());
      continue;
    }
    const auto o = parse_observable(item);
    if (!o) throw Error(ErrorCode::InvalidArgument, "unknown observable '" + item + "'");
    out.push_back(*o);
  }
  return out;
}

int run_sweep(const SweepArgs& a) {
  SweepSpec spec;
  spec.gamma = a.gamma;
  spec.lambda_min = a.lambda_min;
  spec.lambda_max = a.lambda_max;
  spec.points = a.points;
  if (a.spacing == "linear") {
    spec.spacing = Spacing::Linear;
  } else if (a.spacing == "log") {
    spec.spacing = Spacing::LogTowardCritical;
  } else {
    throw Error(ErrorCode::InvalidArgument, "spacing must be linear or log");
  }
  spec.observables = parse_observable_list(a.observables);
  spec.with_derivative = a.derivative;

  const SweepTable table = sweep(spec);
  std::size_t failed = 0;
  for (const auto& row : table) {
    if (row.error.empty()) continue;
    ++failed;
    std::cerr << "warning: lambda=" << format_number(row.lambda) << ' ' << name(row.observable) << ": "
              << row.error << '\n';
  }
  if (a.output.empty()) {
    write_sweep_csv(std::cout, table);
  } else {
    std::ofstream file(a.output);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + a.output);
    write_sweep_csv(file, table);
  }
  return 10 * failed <= table.size() ? kExitOk : kExitNumerical;
}

struct FitArgs {
  double gamma = 1.0;
  std::string law = "log";
  std::string target = "dEz";
  std::string side = "best";
  double window_min = 0.0;
  double window_max = 0.0;
  int points = 25;
};

int run_fit(const FitArgs& a) {
  validate(ModelParams{a.gamma, 1.0});
  const auto target = parse_observable(a.target);
  if (!target) throw Error(ErrorCode::InvalidArgument, "unknown target '" + a.target + "'");
  Law law;
  if (a.law == "log") {
    law = Law::Log;
  } else if (a.law == "invsqrt") {
    law = Law::InvSqrt;
  } else {
    throw Error(ErrorCode::InvalidArgument, "law must be log or invsqrt");
  }
  FitWindow window = law == Law::Log ? kLogWindow : kInvSqrtWindow;
  if (a.window_min > 0.0) window.min_offset = a.window_min;
  if (a.window_max > 0.0) window.max_offset = a.window_max;
  window.points = a.points;

  ScalingFit fit;
  if (a.side == "best") {
    fit = law == Law::Log ? fit_log_both_sides(*target, a.gamma, window).best()
                          : fit_observable(*target, a.gamma, law, Side::Above, window);
  } else if (a.side == "below" || a.side == "above") {
    fit = fit_observable(*target, a.gamma, law, a.side == "below" ? Side::Below : Side::Above, window);
  } else {
    throw Error(ErrorCode::InvalidArgument, "side must be below, above or best");
  }
  fit_record(fit, a.target, a.gamma).write(std::cout);
  return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<SuiteReport> reports;
  const bool all = suite == "all";
  if (!all && suite != "identities" && suite != "symmetry" && suite != "oracle") {
    throw Error(ErrorCode::InvalidArgument, "suite must be identities, symmetry, oracle or all");
  }
  if (all || suite == "identities") reports.push_back(verify_identities(seed));
  if (all || suite == "symmetry") reports.push_back(verify_symmetry());
  if (all || suite == "oracle") reports.push_back(verify_oracle());
  bool ok = true;
  for (const auto& r : reports) {
    print(std::cout, r);
    ok = ok && r.passed();
  }
  return ok ? kExitOk : kExitVerify;
}

int run_report(const std::vector<double>& gammas) {
  const auto rows = coefficient_report(gammas);
  constexpr const char* kKeys[] = {"c_x", "c_y", "c_z", "d_x", "d_y", "d_z"};
  for (const auto& row : rows) {
    JsonRecord r;
    r.set("gamma", row.gamma);
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      const auto& cell = row.cells[i];
      const std::string k = kKeys[i];
      if (cell.fit) {
        const ScalingFit& best = cell.fit->best();
        r.set(k, best.coefficient).set(k + "_stderr", best.std_error).set(k + "_side", name(best.side));
        r.set(k + "_below", cell.fit->below.coefficient).set(k + "_above", cell.fit->above.coefficient);
      } else {
        r.set(k, std::nan("")).set(k + "_error", cell.error);
      }
    }
    r.set("schema_version", kSchemaVersion).write(std::cout);
  }
  return kExitOk;
}

// Appends `--key value` for every config entry the chosen subcommand knows
// and the command line does not already set.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::string path;
  std::string command;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else if (command.empty() && !args[i].empty() && args[i][0] != '-') {
      command = args[i];
    }
  }
  if (path.empty() || command.empty()) return args;
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read config " + path);
  CLI::App* sub = app.get_subcommand_no_throw(command);
  if (!sub) return args;

  auto present = [&](const std::string& flag) {
    for (const auto& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::string line;
  while (std::getline(file, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = CLI::detail::trim_copy(line.substr(0, eq));
    const std::string value = CLI::detail::trim_copy(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string flag = "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (!opt || present(flag)) continue;
    const bool is_flag = opt->get_items_expected_min() == 0;
    if (is_flag && (value == "false" || value == "0")) continue;
    args.push_back(flag + "=" + value);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-qubit-gate observables of the transverse-field XY chain"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --config follow the subcommand
  std::string config;
  app.add_option("--config", config, "key=value file; command-line flags win");

  PointArgs corr_args, gap_args, accel_args;
  auto* corr = app.add_subcommand("correlators", "the five ground-state correlators");
  add_point_options(corr, corr_args);
  auto* gaps = app.add_subcommand("gaps", "energy gaps for the x, y, z gates");
  add_point_options(gaps, gap_args);
  auto* accel = app.add_subcommand("accel", "short-time accelerations for the x, y, z gates");
  add_point_options(accel, accel_args);

  DynamicsArgs dyn_args;
  auto* dyn = app.add_subcommand("dynamics", "short-time magnetization after a gate (finite ring)");
  dyn->add_option("--gamma", dyn_args.gamma)->required();
  dyn->add_option("--lambda", dyn_args.lambda)->required();
  dyn->add_option("--size", dyn_args.size);
  dyn->add_option("--axis", dyn_args.axis);
  dyn->add_option("--tau-max", dyn_args.tau_max, "largest time; default 0.01 / lambda");
  dyn->add_option("--steps", dyn_args.steps, "number of times including tau = 0");

  SweepArgs sweep_args;
  auto* sw = app.add_subcommand("sweep", "CSV table of observables over lambda");
  sw->add_option("--gamma", sweep_args.gamma)->required();
  sw->add_option("--lambda-min", sweep_args.lambda_min);
  sw->add_option("--lambda-max", sweep_args.lambda_max);
  sw->add_option("--points", sweep_args.points);
  sw->add_option("--spacing", sweep_args.spacing, "linear or log (geometric toward lambda = 1)");
  sw->add_option("--observables", sweep_args.observables, "comma list: dEx,dEy,dEz,Lx,Ly,Lz,correlators,...");
  sw->add_flag("--derivative", sweep_args.derivative, "also emit d/dlambda");
  sw->add_option("--output", sweep_args.output, "file instead of stdout");

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "divergence-law fit of a lambda derivative");
  fit->add_option("--gamma", fit_args.gamma)->required();
  fit->add_option("--law", fit_args.law, "log or invsqrt");
  fit->add_option("--target", fit_args.target, "observable whose derivative is fitted, e.g. dEz or dLx");
  fit->add_option("--side", fit_args.side, "below, above or best (smaller stderr)");
  fit->add_option("--window-min", fit_args.window_min, "smallest |lambda - 1|");
  fit->add_option("--window-max", fit_args.window_max, "largest |lambda - 1|");
  fit->add_option("--points", fit_args.points, "samples per side");

  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  auto* ver = app.add_subcommand("verify", "identity, symmetry and oracle suites");
  ver->add_option("--suite", suite, "identities, symmetry, oracle or all");
  ver->add_option("--seed", seed);

  std::vector<double> gammas{0.25, 0.5, 0.75, 0.9, 1.0};
  auto* rep = app.add_subcommand("report", "log-law coefficient table over gamma");
  rep->add_option("--gammas", gammas)->delimiter(',');

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*corr) return run_correlators(corr_args);
    if (*gaps) return run_observable_set(gap_args, true);
    if (*accel) return run_observable_set(accel_args, false);
    if (*dyn) return run_dynamics(dyn_args);
    if (*sw) return run_sweep(sweep_args);
    if (*fit) return run_fit(fit_args);
    if (*ver) return run_verify(suite, seed);
    if (*rep) return run_report(gammas);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitValidation : kExitNumerical;
  }
  return kExitOk;
}
