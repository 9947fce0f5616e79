#include "qpt/model.hpp"

#include <cmath>
#include <string>

#include "qpt/error.hpp"

namespace qpt {

void validate(const ModelParams& params) {
  if (!(params.gamma >= 0.0 && params.gamma <= 1.0)) {
    throw Error(ErrorCode::GammaOutOfRange, "gamma must lie in [0, 1], got " + std::to_string(params.gamma));
  }
  if (!(params.lambda > 0.0) || !std::isfinite(params.lambda)) {
    throw Error(ErrorCode::LambdaNonPositive, "lambda must be positive and finite, got " + std::to_string(params.lambda));
  }
}

void validate(const ModelParams& params, const LatticeSpec& lattice, int site_cap) {
  validate(params);
  if (const auto* chain = std::get_if<FiniteChain>(&lattice)) {
    if (chain->sites < kMinSites) {
      throw Error(ErrorCode::LatticeTooSmall,
                  "need at least " + std::to_string(kMinSites) + " sites, got " + std::to_string(chain->sites));
    }
    if (chain->sites > site_cap) {
      throw Error(ErrorCode::LatticeTooLarge,
                  "dense diagonalization capped at " + std::to_string(site_cap) + " sites, got " +
                      std::to_string(chain->sites));
    }
  }
}

Axis parse_axis(std::string_view text) {
  if (text == "x" || text == "X") return Axis::X;
  if (text == "y" || text == "Y") return Axis::Y;
  if (text == "z" || text == "Z") return Axis::Z;
  throw Error(ErrorCode::InvalidArgument, "unknown axis '" + std::string(text) + "'");
}

PauliString::PauliString(std::map<int, Axis> factors, Complex coefficient)
    : factors_(std::move(factors)), coefficient_(coefficient) {}

PauliString PauliString::single(int site, Axis axis, Complex coefficient) {
  return PauliString({{site, axis}}, coefficient);
}

PauliString PauliString::translated(int shift, int sites) const {
  std::map<int, Axis> moved;
  for (auto [site, axis] : factors_) {
    moved.emplace(((site + shift) % sites + sites) % sites, axis);
  }
  return PauliString(std::move(moved), coefficient_);
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t mask = 0;
  for (auto [site, axis] : factors_) {
    if (axis != Axis::Z) mask |= std::uint64_t{1} << site;
  }
  return mask;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t mask = 0;
  for (auto [site, axis] : factors_) {
    if (axis != Axis::X) mask |= std::uint64_t{1} << site;
  }
  return mask;
}

int PauliString::y_count() const {
  int count = 0;
  for (auto [site, axis] : factors_) count += axis == Axis::Y;
  return count;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  using Complex = PauliString::Complex;
  constexpr Complex kI{0.0, 1.0};
  std::map<int, Axis> factors = a.factors_;
  Complex coefficient = a.coefficient_ * b.coefficient_;
  for (auto [site, axis] : b.factors_) {
    auto it = factors.find(site);
    if (it == factors.end()) {
      factors.emplace(site, axis);
      continue;
    }
    const int lhs = static_cast<int>(it->second);
    const int rhs = static_cast<int>(axis);
    if (lhs == rhs) {
      factors.erase(it);
      continue;
    }
    // sigma_a sigma_b = i eps_abc sigma_c
    const int third = 3 - lhs - rhs;
    coefficient *= ((rhs - lhs + 3) % 3 == 1) ? kI : -kI;
    it->second = static_cast<Axis>(third);
  }
  return PauliString(std::move(factors), coefficient);
}

PauliSum simplify(PauliSum sum, double tol) {
  std::map<std::map<int, Axis>, PauliString::Complex> merged;
  for (const auto& p : sum) merged[p.factors()] += p.coefficient();
  PauliSum out;
  for (auto& [factors, coefficient] : merged) {
    if (std::abs(coefficient) > tol) out.emplace_back(factors, coefficient);
  }
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  out.reserve(2 * a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) {
      out.push_back(p * q);
      out.push_back(-1.0 * (q * p));
    }
  }
  return simplify(std::move(out));
}

std::vector<PauliString> hamiltonian_terms(const ModelParams& params, int sites) {
  validate(params);
  if (sites < 2) {
    throw Error(ErrorCode::LatticeTooSmall, "a ring needs at least 2 sites");
  }
  const double xx = -params.lambda * (1.0 + params.gamma) / 2.0;
  const double yy = -params.lambda * (1.0 - params.gamma) / 2.0;
  std::vector<PauliString> terms;
  terms.reserve(3 * static_cast<std::size_t>(sites));
  for (int i = 0; i < sites; ++i) {
    const int j = (i + 1) % sites;
    terms.emplace_back(std::map<int, Axis>{{i, Axis::X}, {j, Axis::X}}, xx);
    terms.emplace_back(std::map<int, Axis>{{i, Axis::Y}, {j, Axis::Y}}, yy);
    terms.push_back(PauliString::single(i, Axis::Z, 1.0));
  }
  return terms;
}

}  // namespace qpt
