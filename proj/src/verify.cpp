#include "qpt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "parallel.hpp"
#include "qpt/error.hpp"
#include "qpt/exactdiag.hpp"
#include "qpt/extrapolate.hpp"
#include "qpt/freefermion.hpp"
#include "qpt/observables.hpp"
#include "qpt/output.hpp"

namespace qpt {

namespace {

// Portable uniform double in [0, 1) from the standardized mt19937_64 stream.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct Worst {
  double value = 0.0;
  std::string where;

  void update(double v, const std::string& at) {
    if (!(v <= value)) {
      value = v;
      where = at;
    }
  }
};

std::string at(const ModelParams& p) {
  std::ostringstream s;
  s << "gamma=" << format_number(p.gamma) << " lambda=" << format_number(p.lambda);
  return s.str();
}

const char* method_tag(ExtrapolationMethod m) {
  switch (m) {
    case ExtrapolationMethod::Geometric: return "";
    case ExtrapolationMethod::Richardson: return " (1/N)";
    case ExtrapolationMethod::Bracket: return " (bracket)";
  }
  return "";
}

CheckResult check(std::string name, const Worst& worst, double tolerance) {
  return {std::move(name), worst.value <= tolerance, worst.value, tolerance, worst.where};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport verify_identities(std::uint64_t seed, int points, int sites, int threads) {
  std::mt19937_64 rng(seed);
  std::vector<ModelParams> grid;
  for (int i = 0; i < points; ++i) {
    const double gamma = unit_uniform(rng);
    const double lambda = 3.0 * (1.0 - unit_uniform(rng));
    grid.push_back({gamma, lambda});
  }

  struct PointResult {
    double gap_dev = 0.0;
    double accel_dev = 0.0;
    double sum_rule_dev = 0.0;
    double min_gap = 0.0;
    std::string error;
  };
  std::vector<PointResult> results(grid.size());
  detail::parallel_for(grid.size(), threads, [&](std::size_t i) {
    auto& r = results[i];
    try {
      const DenseSpectrum spectrum(grid[i], sites);
      const CorrelatorSet c = correlators_of(spectrum.ground_state(), sites);
      const GapSet gaps = gaps_from_correlators(grid[i], c);
      const AccelSet accels = accels_from_correlators(grid[i], c);
      std::array<double, 3> direct_gaps{};
      r.min_gap = std::numeric_limits<double>::infinity();
      for (Axis a : kAllAxes) {
        const double g = gap_direct(spectrum, a);
        direct_gaps[static_cast<int>(a)] = g;
        r.min_gap = std::min(r.min_gap, g);
        r.gap_dev = std::max(r.gap_dev, std::abs(gaps[a] - g));
        r.accel_dev = std::max(r.accel_dev, std::abs(accels[a] - accel_direct(spectrum, a)));
      }
      r.sum_rule_dev = std::abs(direct_gaps[0] + direct_gaps[1] - (direct_gaps[2] - 4.0 * c.m_z));
    } catch (const Error& e) {
      r.error = e.what();
    }
  });

  Worst gap;
  Worst accel;
  Worst sum_rule;
  Worst negativity;
  std::string failures;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& r = results[i];
    if (!r.error.empty()) {
      failures += at(grid[i]) + ": " + r.error + "; ";
      continue;
    }
    gap.update(r.gap_dev, at(grid[i]));
    accel.update(r.accel_dev, at(grid[i]));
    sum_rule.update(r.sum_rule_dev, at(grid[i]));
    negativity.update(std::max(0.0, -r.min_gap), at(grid[i]));
  }

  SuiteReport report{"identities", {}};
  report.checks.push_back(check("gap formula vs definition", gap, 1e-10));
  report.checks.push_back(check("acceleration formula vs double commutator", accel, 1e-10));
  report.checks.push_back(check("gap sum rule de_x + de_y = de_z - 4 m_z", sum_rule, 1e-10));
  report.checks.push_back(check("gap variational positivity", negativity, 1e-12));
  if (!failures.empty()) report.checks.push_back({"grid points evaluated", false, 1.0, 0.0, failures});
  return report;
}

SuiteReport verify_symmetry(int sites) {
  Worst gaps_ed;
  Worst accels_ed;
  Worst three_point_ed;
  Worst gaps_thermo;
  Worst accels_thermo;
  Worst three_point_thermo;
  SuiteReport report{"symmetry", {}};
  std::string failures;
  for (double lambda : {0.5, 1.5, 2.5}) {
    const ModelParams p{0.0, lambda};
    try {
      const DenseSpectrum spectrum(p, sites);
      const CorrelatorSet c = correlators_of(spectrum.ground_state(), sites);
      gaps_ed.update(std::abs(gap_direct(spectrum, Axis::X) - gap_direct(spectrum, Axis::Y)), at(p));
      accels_ed.update(std::abs(accel_direct(spectrum, Axis::X) - accel_direct(spectrum, Axis::Y)), at(p));
      three_point_ed.update(std::abs(c.g_xzx - c.g_yzy), at(p));

      const CorrelatorSet t = correlators_thermo(p);
      const GapSet g = gaps_from_correlators(p, t);
      const AccelSet a = accels_from_correlators(p, t);
      gaps_thermo.update(std::abs(g.de_x - g.de_y), at(p));
      accels_thermo.update(std::abs(a.lam_x - a.lam_y), at(p));
      three_point_thermo.update(std::abs(t.g_xzx - t.g_yzy), at(p));
    } catch (const Error& e) {
      failures += at(p) + ": " + e.what() + "; ";
    }
  }
  report.checks.push_back(check("ED de_x = de_y", gaps_ed, 1e-10));
  report.checks.push_back(check("ED lam_x = lam_y", accels_ed, 1e-10));
  report.checks.push_back(check("ED g_xzx = g_yzy", three_point_ed, 1e-10));
  report.checks.push_back(check("thermo de_x = de_y", gaps_thermo, 1e-10));
  report.checks.push_back(check("thermo lam_x = lam_y", accels_thermo, 1e-10));
  report.checks.push_back(check("thermo g_xzx = g_yzy", three_point_thermo, 1e-10));
  if (!failures.empty()) report.checks.push_back({"grid points evaluated", false, 1.0, 0.0, failures});
  return report;
}

SuiteReport verify_oracle(int threads) {
  constexpr std::array sizes{8, 10, 12};
  std::vector<ModelParams> grid;
  for (double g : {0.0, 0.5, 1.0}) {
    for (double l : {0.5, 1.5, 2.5}) grid.push_back({g, l});
  }
  // One job per (point, size) so the N = 12 diagonalizations spread across workers.
  std::vector<CorrelatorSet> ed(grid.size() * sizes.size());
  std::vector<std::string> errors(ed.size());
  detail::parallel_for(ed.size(), threads, [&](std::size_t j) {
    try {
      ed[j] = correlators_ed(grid[j / sizes.size()], sizes[j % sizes.size()]);
    } catch (const Error& e) {
      errors[j] = e.what();
    }
  });

  SuiteReport report{"oracle", {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ModelParams& p = grid[i];
    std::string failure;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
      if (!errors[i * sizes.size() + s].empty()) failure = errors[i * sizes.size() + s];
    }
    CorrelatorSet thermo;
    try {
      thermo = correlators_thermo(p);
    } catch (const Error& e) {
      failure = e.what();
    }
    if (!failure.empty()) {
      report.checks.push_back({"quadrature vs ED extrapolation at " + at(p), false, 1.0, 0.0, failure});
      continue;
    }
    double worst_excess = -std::numeric_limits<double>::infinity();
    double worst_dev = 0.0;
    double worst_tol = 0.0;
    std::ostringstream detail;
    const auto t = thermo.as_array();
    for (std::size_t k = 0; k < t.size(); ++k) {
      std::array<SizedValue, sizes.size()> series;
      for (std::size_t s = 0; s < sizes.size(); ++s) {
        series[s] = {sizes[s], ed[i * sizes.size() + s].as_array()[k]};
      }
      const Extrapolation e = extrapolate_thermo(series);
      const double dev = std::abs(t[k] - e.estimate);
      const double tol = std::max(1e-4, e.uncertainty);
      detail << kCorrelatorNames[k] << ": quad=" << format_number(t[k]) << " ed=" << format_number(e.estimate)
             << " +-" << format_number(e.uncertainty) << method_tag(e.method) << "; ";
      if (dev - tol > worst_excess) {
        worst_excess = dev - tol;
        worst_dev = dev;
        worst_tol = tol;
      }
    }
    report.checks.push_back(
        {"quadrature vs ED extrapolation at " + at(p), worst_excess <= 0.0, worst_dev, worst_tol, detail.str()});
  }
  return report;
}

void print(std::ostream& out, const SuiteReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS" : "FAIL") << "  [" << report.suite << "] " << c.name
        << "  measured=" << format_number(c.measured) << " tol=" << format_number(c.tolerance);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
}

}  // namespace qpt
