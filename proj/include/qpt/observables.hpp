#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "qpt/correlators.hpp"
#include "qpt/model.hpp"

namespace qpt {

/// Energy cost (units of h) of sigma^alpha on one site of the ground state.
struct GapSet {
  double de_x = 0.0;
  double de_y = 0.0;
  double de_z = 0.0;

  double operator[](Axis a) const { return std::array{de_x, de_y, de_z}[static_cast<int>(a)]; }
};

/// Short-time diffusion coefficients: <z_k(tau)> - <z_k(0)> = -4 Lambda_alpha (lambda tau)^2.
struct AccelSet {
  double lam_x = 0.0;
  double lam_y = 0.0;
  double lam_z = 0.0;

  double operator[](Axis a) const { return std::array{lam_x, lam_y, lam_z}[static_cast<int>(a)]; }
};

// Both maps are linear in the correlators and accept any source (ED,
// quadrature, synthetic). No clamping.
GapSet gaps_from_correlators(const ModelParams& params, const CorrelatorSet& c);
AccelSet accels_from_correlators(const ModelParams& params, const CorrelatorSet& c);

/// Scalar observables addressable by sweeps and fits.
enum class Observable { GapX, GapY, GapZ, AccelX, AccelY, AccelZ, Mz, Gxx, Gyy, Gxzx, Gyzy };

inline constexpr std::array kGapAndAccelObservables = {Observable::GapX,   Observable::GapY,   Observable::GapZ,
                                                       Observable::AccelX, Observable::AccelY, Observable::AccelZ};
inline constexpr std::array kCorrelatorObservables = {Observable::Mz, Observable::Gxx, Observable::Gyy,
                                                      Observable::Gxzx, Observable::Gyzy};

std::string_view name(Observable o);
/// Accepts dEx/dEy/dEz, Lx/Ly/Lz (also dLx/dLy/dLz) and the correlator names.
std::optional<Observable> parse_observable(std::string_view text);

double evaluate(Observable o, const ModelParams& params, const CorrelatorSet& c);

}  // namespace qpt
