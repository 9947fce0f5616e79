#pragma once

// Thermodynamic-limit ground-state correlators from the Jordan-Wigner
// free-fermion solution. Every correlator needed here reduces to a single
// fermionic contraction:
//
//   g(R) = (1/pi) int_0^pi [cos(kR)(lambda cos k - 1) + gamma lambda sin(kR) sin k] / Lambda_k dk
//
// with m_z = g(0), g_xx = g(1), g_yy = g(-1), g_xzx = -g(2), g_yzy = -g(-2).
// The orientation and signs are fixed against the exact-diagonalization
// oracle for the +sum z_i field convention.

#include "qpt/correlators.hpp"
#include "qpt/model.hpp"
#include "qpt/quadrature.hpp"

namespace qpt {

/// Quasiparticle energy Lambda_k = sqrt((1 - lambda cos k)^2 + (gamma lambda sin k)^2).
double dispersion(const ModelParams& params, double k);

/// Breakpoints on [0, pi] where the contraction kernel is nearly singular or kinked.
std::vector<double> contraction_breakpoints(const ModelParams& params);

/// g(R) for R in {-2, ..., 2}. Throws QuadratureNonConvergence or InvalidArgument.
double contraction(const ModelParams& params, int distance, const QuadratureSettings& settings = {});

CorrelatorSet correlators_thermo(const ModelParams& params, const QuadratureSettings& settings = {});

}  // namespace qpt
