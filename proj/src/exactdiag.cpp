#include "qpt/exactdiag.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpt/error.hpp"

namespace qpt {

namespace {

using Complex = std::complex<double>;

constexpr double kDegeneracyTol = 1e-12;
constexpr double kHermitianTol = 1e-10;

PauliString site_op(int site, Axis axis) { return PauliString::single(site, axis); }

// The five correlator strings centred on site k of an N-site ring.
std::array<PauliString, 5> correlator_strings(int k, int sites) {
  const int left = (k - 1 + sites) % sites;
  const int right = (k + 1) % sites;
  return {
      site_op(k, Axis::Z),
      PauliString({{k, Axis::X}, {right, Axis::X}}),
      PauliString({{k, Axis::Y}, {right, Axis::Y}}),
      PauliString({{left, Axis::X}, {k, Axis::Z}, {right, Axis::X}}),
      PauliString({{left, Axis::Y}, {k, Axis::Z}, {right, Axis::Y}}),
  };
}

}  // namespace

StateVector apply(std::span<const PauliString> ops, const StateVector& state) {
  StateVector out = StateVector::Zero(state.size());
  for (const auto& op : ops) out += qpt::apply(op, state);
  return out;
}

std::complex<double> matrix_element(const StateVector& bra, const PauliString& op, const StateVector& ket) {
  return bra.dot(qpt::apply(op, ket));
}

double expectation(const StateVector& state, const PauliString& op) {
  const Complex value = matrix_element(state, op, state);
  if (std::abs(value.imag()) > kHermitianTol) {
    throw Error(ErrorCode::NonHermitianResult,
                "expectation has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

DenseSpectrum::DenseSpectrum(const ModelParams& params, int sites)
    : params_(params), sites_(sites) {
  validate(params, FiniteChain{sites});
  terms_ = hamiltonian_terms(params, sites);

  const std::uint32_t dim = std::uint32_t{1} << sites;
  std::vector<std::int64_t> position(dim);
  for (std::uint32_t b = 0; b < dim; ++b) {
    auto& sector = sectors_[std::popcount(b) & 1];
    position[b] = static_cast<std::int64_t>(sector.basis.size());
    sector.basis.push_back(b);
  }

  for (auto& sector : sectors_) {
    const auto n = static_cast<Eigen::Index>(sector.basis.size());
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
      const std::uint64_t b = sector.basis[static_cast<std::size_t>(col)];
      for (const auto& term : terms_) {
        // Every term is real: xx and zz-type masks carry i^0 or i^2.
        const double sign = (std::popcount(b & term.z_mask()) & 1) ? -1.0 : 1.0;
        const double y_phase = (term.y_count() % 4 == 2) ? -1.0 : 1.0;
        const auto row = position[b ^ term.x_mask()];
        block(row, col) += term.coefficient().real() * y_phase * sign;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::DiagonalizationFailure,
                  "dense eigensolver failed for N=" + std::to_string(sites));
    }
    sector.energies = solver.eigenvalues();
    sector.vectors = solver.eigenvectors();
  }

  const double even = sectors_[0].energies[0];
  const double odd = sectors_[1].energies[0];
  const int pick = (odd < even - kDegeneracyTol) ? 1 : 0;
  const auto& sector = sectors_[pick];
  ground_energy_ = sector.energies[0];

  Eigen::VectorXd column = sector.vectors.col(0);
  Eigen::Index largest = 0;
  column.cwiseAbs().maxCoeff(&largest);
  if (column[largest] < 0.0) column = -column;

  ground_state_ = StateVector::Zero(dim);
  for (std::size_t i = 0; i < sector.basis.size(); ++i) {
    ground_state_[sector.basis[i]] = column[static_cast<Eigen::Index>(i)];
  }
}

double DenseSpectrum::spectral_gap() const {
  const Eigen::VectorXd all = eigenvalues();
  return all.size() > 1 ? all[1] - all[0] : 0.0;
}

Eigen::VectorXd DenseSpectrum::eigenvalues() const {
  Eigen::VectorXd all(sectors_[0].energies.size() + sectors_[1].energies.size());
  all << sectors_[0].energies, sectors_[1].energies;
  std::sort(all.begin(), all.end());
  return all;
}

StateVector DenseSpectrum::evolve(const StateVector& state, double tau) const {
  if (state.size() != (Eigen::Index{1} << sites_)) {
    throw Error(ErrorCode::InvalidArgument, "state dimension does not match the chain");
  }
  StateVector out = StateVector::Zero(state.size());
  for (const auto& sector : sectors_) {
    const auto n = static_cast<Eigen::Index>(sector.basis.size());
    Eigen::VectorXcd local(n);
    for (Eigen::Index i = 0; i < n; ++i) local[i] = state[sector.basis[static_cast<std::size_t>(i)]];
    Eigen::VectorXcd modes = sector.vectors.transpose() * local;
    for (Eigen::Index i = 0; i < n; ++i) modes[i] *= std::polar(1.0, -sector.energies[i] * tau);
    local = sector.vectors * modes;
    for (Eigen::Index i = 0; i < n; ++i) out[sector.basis[static_cast<std::size_t>(i)]] = local[i];
  }
  return out;
}

GroundState ground_state(const ModelParams& params, int sites) {
  DenseSpectrum spectrum(params, sites);
  return {spectrum.ground_energy(), spectrum.ground_state()};
}

CorrelatorSet correlators_of(const StateVector& state, int sites, double spread_tol) {
  std::array<double, 5> sum{};
  std::array<double, 5> lo;
  std::array<double, 5> hi;
  lo.fill(std::numeric_limits<double>::infinity());
  hi.fill(-std::numeric_limits<double>::infinity());
  for (int k = 0; k < sites; ++k) {
    const auto strings = correlator_strings(k, sites);
    for (std::size_t i = 0; i < strings.size(); ++i) {
      const double v = expectation(state, strings[i]);
      sum[i] += v;
      lo[i] = std::min(lo[i], v);
      hi[i] = std::max(hi[i], v);
    }
  }
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (hi[i] - lo[i] > spread_tol) {
      throw Error(ErrorCode::TranslationInvarianceViolation,
                  std::string(kCorrelatorNames[i]) + " varies by " + std::to_string(hi[i] - lo[i]) +
                      " across sites");
    }
    sum[i] /= sites;
  }
  return CorrelatorSet::from_array(sum);
}

CorrelatorSet correlators_ed(const ModelParams& params, int sites) {
  return correlators_of(ground_state(params, sites).state, sites);
}

double gap_direct(const DenseSpectrum& spectrum, Axis axis) {
  const StateVector psi = qpt::apply(site_op(0, axis), spectrum.ground_state());
  const StateVector h_psi = qpt::apply(spectrum.terms(), psi);
  return psi.dot(h_psi).real() - spectrum.ground_energy();
}

double gap_direct(const ModelParams& params, int sites, Axis axis) {
  return gap_direct(DenseSpectrum(params, sites), axis);
}

double accel_direct(const DenseSpectrum& spectrum, Axis axis) {
  // Built symbolically: the double commutator is O(lambda) while H psi is
  // O(N), so evaluating it on vectors would cancel catastrophically.
  const PauliSum& h = spectrum.terms();
  const PauliSum nested = commutator(h, commutator(h, PauliSum{site_op(0, Axis::Z)}));
  const StateVector psi = qpt::apply(site_op(0, axis), spectrum.ground_state());
  double value = 0.0;
  for (const auto& term : nested) value += matrix_element(psi, term, psi).real();
  const double lambda = spectrum.params().lambda;
  return value / (8.0 * lambda * lambda);
}

double accel_direct(const ModelParams& params, int sites, Axis axis) {
  return accel_direct(DenseSpectrum(params, sites), axis);
}

StateVector evolve(const ModelParams& params, int sites, const StateVector& state, double tau) {
  if (std::abs(tau) > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "evolution is limited to |tau| <= 1");
  }
  return DenseSpectrum(params, sites).evolve(state, tau);
}

std::vector<TimePoint> short_time_series(const DenseSpectrum& spectrum, Axis axis, std::span<const double> taus) {
  const double lambda = spectrum.params().lambda;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (taus[i] < 0.0 || (i > 0 && taus[i] < taus[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "taus must be non-negative and ascending");
    }
    if (lambda * taus[i] > 0.05) {
      throw Error(ErrorCode::InvalidArgument, "lambda * tau exceeds the short-time bound 0.05");
    }
  }
  const PauliString z0 = site_op(0, Axis::Z);
  const StateVector psi = qpt::apply(site_op(0, axis), spectrum.ground_state());
  std::vector<TimePoint> series;
  series.reserve(taus.size());
  for (double tau : taus) {
    const StateVector evolved = tau == 0.0 ? psi : spectrum.evolve(psi, tau);
    series.push_back({tau, expectation(evolved, z0)});
  }
  return series;
}

std::vector<TimePoint> short_time_series(const ModelParams& params, int sites, Axis axis,
                                         std::span<const double> taus) {
  return short_time_series(DenseSpectrum(params, sites), axis, taus);
}

ShortTimeFit fit_short_time(std::span<const TimePoint> series, double lambda) {
  std::vector<TimePoint> used;
  for (const auto& p : series) {
    if (lambda * p.tau <= 0.01 + 1e-15) used.push_back(p);
  }
  if (used.size() < 3) {
    throw Error(ErrorCode::InsufficientPoints, "short-time fit needs at least 3 points with lambda*tau <= 0.01");
  }
  double scale = 0.0;
  for (const auto& p : used) scale = std::max(scale, p.tau);
  if (scale == 0.0) {
    throw Error(ErrorCode::InsufficientPoints, "short-time fit needs nonzero times");
  }
  const auto n = static_cast<Eigen::Index>(used.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double u2 = std::pow(used[static_cast<std::size_t>(i)].tau / scale, 2);
    design.row(i) << 1.0, u2, u2 * u2;
    rhs[i] = used[static_cast<std::size_t>(i)].m_z;
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
  return {coef[1] / (scale * scale), coef[2] / std::pow(scale, 4), coef[0], static_cast<int>(n)};
}

}  // namespace qpt
