#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpt/criticality.hpp"

namespace qpt {

struct CheckResult {
  std::string name;
  bool passed;
  double measured;   // worst deviation observed
  double tolerance;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

inline constexpr std::uint64_t kDefaultSeed = 7;

/// Gap and acceleration identities on `points` seeded random
/// (gamma, lambda) in [0, 1] x (0, 3]; also variational positivity and
/// de_x + de_y = de_z - 4 m_z.
SuiteReport verify_identities(std::uint64_t seed = kDefaultSeed, int points = 50, int sites = 10,
                              int threads = default_threads());

/// gamma = 0 degeneracies (de_x = de_y, lam_x = lam_y, g_xzx = g_yzy) at
/// lambda in {0.5, 1.5, 2.5}, on the ED ring and in the thermodynamic limit.
SuiteReport verify_symmetry(int sites = 10);

/// Quadrature correlators against ED extrapolation over N = 8, 10, 12 on the
/// 3 x 3 grid gamma in {0, 0.5, 1}, lambda in {0.5, 1.5, 2.5}.
SuiteReport verify_oracle(int threads = default_threads());

void print(std::ostream& out, const SuiteReport& report);

}  // namespace qpt
