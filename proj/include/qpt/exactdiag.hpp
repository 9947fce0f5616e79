#pragma once

// Finite-ring exact diagonalization. Basis state b encodes site i in bit i,
// with bit value 0 meaning sigma^z = +1.

#include <Eigen/Dense>
#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qpt/correlators.hpp"
#include "qpt/model.hpp"

namespace qpt {

using StateVector = Eigen::VectorXcd;

/// P|state> for a Pauli string; P|b> = c i^{#y} (-1)^{|b & z|} |b ^ x>.
template <typename Derived>
StateVector apply(const PauliString& op, const Eigen::MatrixBase<Derived>& state) {
  using Complex = std::complex<double>;
  static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::uint64_t xm = op.x_mask();
  const std::uint64_t zm = op.z_mask();
  const Complex c = op.coefficient() * kIPow[op.y_count() % 4];
  StateVector out(state.size());
  for (Eigen::Index b = 0; b < state.size(); ++b) {
    const auto bits = static_cast<std::uint64_t>(b);
    const double sign = (std::popcount(bits & zm) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(bits ^ xm)] = c * sign * Complex(state[b]);
  }
  return out;
}

/// Sum of Pauli strings applied to a state.
StateVector apply(std::span<const PauliString> ops, const StateVector& state);

/// <state|op|state>; throws NonHermitianResult if the imaginary part exceeds 1e-10.
double expectation(const StateVector& state, const PauliString& op);
std::complex<double> matrix_element(const StateVector& bra, const PauliString& op, const StateVector& ket);

/// Full spectrum of the ring Hamiltonian, block-diagonal in the parity
/// prod_i sigma^z_i (both bond terms flip two spins).
class DenseSpectrum {
 public:
  DenseSpectrum(const ModelParams& params, int sites);

  const ModelParams& params() const { return params_; }
  int sites() const { return sites_; }
  const std::vector<PauliString>& terms() const { return terms_; }

  double ground_energy() const { return ground_energy_; }
  /// Lowest eigenvector, even sector first on a tie below 1e-12, global
  /// phase fixed so the largest-magnitude amplitude is real positive.
  const StateVector& ground_state() const { return ground_state_; }
  /// Distance from the ground energy to the next level, either sector.
  double spectral_gap() const;
  Eigen::VectorXd eigenvalues() const;

  /// exp(-i H tau) state via the eigendecomposition.
  StateVector evolve(const StateVector& state, double tau) const;

 private:
  struct Sector {
    std::vector<std::uint32_t> basis;
    Eigen::VectorXd energies;
    Eigen::MatrixXd vectors;
  };

  ModelParams params_;
  int sites_;
  std::vector<PauliString> terms_;
  std::array<Sector, 2> sectors_;
  double ground_energy_ = 0.0;
  StateVector ground_state_;
};

struct GroundState {
  double energy;
  StateVector state;
};

GroundState ground_state(const ModelParams& params, int sites);

/// Correlators of an arbitrary translation-invariant state, averaged over k.
/// Throws TranslationInvarianceViolation when per-site spread exceeds `spread_tol`.
CorrelatorSet correlators_of(const StateVector& state, int sites, double spread_tol = 1e-8);
CorrelatorSet correlators_ed(const ModelParams& params, int sites);

/// (<psi|H|psi> - E_0) with psi = sigma^axis_0 |g>.
double gap_direct(const DenseSpectrum& spectrum, Axis axis);
double gap_direct(const ModelParams& params, int sites, Axis axis);

/// <psi|[H,[H,z_0]]|psi> / (8 lambda^2) with psi = sigma^axis_0 |g>.
double accel_direct(const DenseSpectrum& spectrum, Axis axis);
double accel_direct(const ModelParams& params, int sites, Axis axis);

StateVector evolve(const ModelParams& params, int sites, const StateVector& state, double tau);

struct TimePoint {
  double tau;
  double m_z;
};

/// Gate sigma^axis on site 0 at tau = 0, then <z_0(tau)>. Requires ascending
/// taus with lambda * max(tau) <= 0.05.
std::vector<TimePoint> short_time_series(const DenseSpectrum& spectrum, Axis axis, std::span<const double> taus);
std::vector<TimePoint> short_time_series(const ModelParams& params, int sites, Axis axis,
                                         std::span<const double> taus);

struct ShortTimeFit {
  double quadratic;  // coefficient of tau^2
  double quartic;    // coefficient of tau^4
  double offset;
  int n_points;
};

/// Least squares y = offset + a tau^2 + b tau^4 over points with lambda*tau <= 0.01.
ShortTimeFit fit_short_time(std::span<const TimePoint> series, double lambda);

}  // namespace qpt
