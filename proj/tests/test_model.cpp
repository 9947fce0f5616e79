#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "qpt/error.hpp"
#include "qpt/model.hpp"

namespace {

using namespace qpt;
using Complex = std::complex<double>;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected qpt::Error";
  return ErrorCode::InvalidArgument;
}

TEST(Validate, AcceptsInteriorPoint) { EXPECT_NO_THROW(validate({1.0, 0.5}, FiniteChain{10})); }

TEST(Validate, RejectsZeroLambda) {
  EXPECT_EQ(code_of([] { validate({1.0, 0.0}, FiniteChain{10}); }), ErrorCode::LambdaNonPositive);
}

TEST(Validate, RejectsShortRing) {
  EXPECT_EQ(code_of([] { validate({0.5, 1.0}, FiniteChain{4}); }), ErrorCode::LatticeTooSmall);
}

TEST(Validate, RejectsGammaAndOversizedRing) {
  EXPECT_EQ(code_of([] { validate({1.5, 1.0}, ThermodynamicLimit{}); }), ErrorCode::GammaOutOfRange);
  EXPECT_EQ(code_of([] { validate({-0.1, 1.0}, ThermodynamicLimit{}); }), ErrorCode::GammaOutOfRange);
  EXPECT_EQ(code_of([] { validate({0.5, 1.0}, FiniteChain{15}); }), ErrorCode::LatticeTooLarge);
  EXPECT_EQ(code_of([] { validate({0.5, std::nan("")}); }), ErrorCode::LambdaNonPositive);
}

int count_with(const std::vector<PauliString>& terms, Axis axis, int support) {
  int n = 0;
  for (const auto& t : terms) {
    if (static_cast<int>(t.factors().size()) == support && t.factors().begin()->second == axis) ++n;
  }
  return n;
}

TEST(HamiltonianTerms, IsingThreeSites) {
  const auto terms = hamiltonian_terms({1.0, 2.0}, 3);
  ASSERT_EQ(terms.size(), 9u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(terms[3 * i].coefficient(), Complex(-2.0));
    EXPECT_EQ(terms[3 * i + 1].coefficient(), Complex(0.0));
    EXPECT_EQ(terms[3 * i + 2].coefficient(), Complex(1.0));
  }
  EXPECT_EQ(count_with(terms, Axis::X, 2), 3);
  EXPECT_EQ(count_with(terms, Axis::Y, 2), 3);
  EXPECT_EQ(count_with(terms, Axis::Z, 1), 3);
}

TEST(HamiltonianTerms, SymmetricXX) {
  for (const auto& t : hamiltonian_terms({0.0, 1.0}, 5)) {
    if (t.factors().size() == 2) EXPECT_DOUBLE_EQ(t.coefficient().real(), -0.5);
  }
}

TEST(HamiltonianTerms, AnisotropicCoefficients) {
  const auto terms = hamiltonian_terms({0.5, 0.8}, 6);
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(terms[3 * i].coefficient().real(), -0.6, 1e-15);
    EXPECT_NEAR(terms[3 * i + 1].coefficient().real(), -0.2, 1e-15);
    EXPECT_EQ(terms[3 * i + 2].coefficient(), Complex(1.0));
  }
  // The last bond wraps around the ring.
  EXPECT_EQ(terms[15].factors(), (std::map<int, Axis>{{5, Axis::X}, {0, Axis::X}}));
}

TEST(HamiltonianTerms, TranslationInvariant) {
  const int n = 7;
  const auto terms = hamiltonian_terms({0.3, 1.7}, n);
  for (int shift = 1; shift < n; ++shift) {
    PauliSum moved;
    for (const auto& t : terms) moved.push_back(t.translated(shift, n));
    EXPECT_EQ(simplify(moved), simplify(terms)) << "shift " << shift;
  }
}

TEST(HamiltonianTerms, CoefficientMagnitudeSum) {
  for (double g : {0.0, 0.4, 1.0}) {
    for (double l : {0.2, 1.0, 2.9}) {
      const int n = 9;
      double sum = 0.0;
      for (const auto& t : hamiltonian_terms({g, l}, n)) sum += std::abs(t.coefficient());
      EXPECT_NEAR(sum, n * (l + 1.0), 1e-12);
    }
  }
}

TEST(PauliString, SingleSiteProducts) {
  const auto x = PauliString::single(0, Axis::X);
  const auto y = PauliString::single(0, Axis::Y);
  const auto z = PauliString::single(0, Axis::Z);
  const Complex i{0.0, 1.0};
  EXPECT_EQ(x * y, PauliString::single(0, Axis::Z, i));
  EXPECT_EQ(y * x, PauliString::single(0, Axis::Z, -i));
  EXPECT_EQ(y * z, PauliString::single(0, Axis::X, i));
  EXPECT_EQ(z * x, PauliString::single(0, Axis::Y, i));
  EXPECT_TRUE((x * x).is_identity());
}

Eigen::Matrix2cd pauli(Axis a) {
  Eigen::Matrix2cd m;
  switch (a) {
    case Axis::X: m << 0, 1, 1, 0; break;
    case Axis::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case Axis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Dense matrix of a string on `sites` qubits, site 0 as the least significant factor.
Eigen::MatrixXcd dense(const PauliString& p, int sites) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1) * p.coefficient();
  for (int s = sites - 1; s >= 0; --s) {
    const auto it = p.factors().find(s);
    const Eigen::Matrix2cd f = it == p.factors().end() ? Eigen::Matrix2cd::Identity() : pauli(it->second);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
    }
    m = next;
  }
  return m;
}

PauliString random_string(std::mt19937& rng, int sites) {
  std::map<int, Axis> f;
  for (int s = 0; s < sites; ++s) {
    const int a = static_cast<int>(rng() % 4);
    if (a < 3) f.emplace(s, static_cast<Axis>(a));
  }
  return PauliString(f);
}

TEST(PauliString, ProductsMatchMatrixAlgebra) {
  std::mt19937 rng(11);
  const int sites = 3;
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_string(rng, sites);
    const auto b = random_string(rng, sites);
    const auto c = random_string(rng, sites);
    EXPECT_LT((dense(a * b, sites) - dense(a, sites) * dense(b, sites)).norm(), 1e-14);
    EXPECT_EQ((a * b) * c, a * (b * c));
    const Complex k = (a * b).coefficient();
    EXPECT_NEAR(std::abs(k), 1.0, 1e-15);
    EXPECT_TRUE(k.real() == 0.0 || k.imag() == 0.0);
  }
}

TEST(PauliString, CommutatorOfAnticommutingPair) {
  const auto comm = commutator({PauliString::single(2, Axis::X)}, {PauliString::single(2, Axis::Y)});
  ASSERT_EQ(comm.size(), 1u);
  EXPECT_EQ(comm.front(), PauliString::single(2, Axis::Z, Complex(0, 2)));
  EXPECT_TRUE(commutator({PauliString::single(0, Axis::X)}, {PauliString::single(1, Axis::Y)}).empty());
}

TEST(Axis, Parse) {
  EXPECT_EQ(parse_axis("y"), Axis::Y);
  EXPECT_EQ(axis_char(Axis::Z), 'z');
  EXPECT_THROW(parse_axis("w"), Error);
}

}  // namespace
