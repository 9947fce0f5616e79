#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string_view>
#include <variant>
#include <vector>

namespace qpt {

/// One point of the transverse-field XY family. The field strength is the
/// energy unit (h = 1), so `lambda` = J/h carries all coupling dependence.
struct ModelParams {
  double gamma = 1.0;
  double lambda = 0.5;
};

struct FiniteChain {
  int sites = 10;
};
struct ThermodynamicLimit {};

using LatticeSpec = std::variant<FiniteChain, ThermodynamicLimit>;

inline constexpr int kMinSites = 5;
inline constexpr int kDenseSiteCap = 14;

/// Throws qpt::Error with GammaOutOfRange, LambdaNonPositive,
/// LatticeTooSmall or LatticeTooLarge.
void validate(const ModelParams& params, const LatticeSpec& lattice, int site_cap = kDenseSiteCap);
void validate(const ModelParams& params);

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr Axis kAllAxes[] = {Axis::X, Axis::Y, Axis::Z};

constexpr char axis_char(Axis a) { return "xyz"[static_cast<int>(a)]; }
Axis parse_axis(std::string_view text);

/// Product of single-site Pauli matrices times a complex coefficient.
/// Sites absent from `factors` carry the identity.
class PauliString {
 public:
  using Complex = std::complex<double>;

  PauliString() = default;
  explicit PauliString(Complex coefficient) : coefficient_(coefficient) {}
  PauliString(std::map<int, Axis> factors, Complex coefficient = 1.0);

  static PauliString single(int site, Axis axis, Complex coefficient = 1.0);

  const std::map<int, Axis>& factors() const { return factors_; }
  Complex coefficient() const { return coefficient_; }
  bool is_identity() const { return factors_.empty(); }

  /// Support relabeled by `shift` modulo `sites`.
  PauliString translated(int shift, int sites) const;

  // Bit masks for the state-vector action P = c * i^{#y} X(x_mask) Z(z_mask).
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;
  int y_count() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend PauliString operator*(Complex s, PauliString p) {
    p.coefficient_ *= s;
    return p;
  }
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::map<int, Axis> factors_;
  Complex coefficient_ = 1.0;
};

using PauliSum = std::vector<PauliString>;

/// Merges strings with equal support and drops coefficients below `tol`.
PauliSum simplify(PauliSum sum, double tol = 0.0);

/// [A, B] = AB - BA, simplified.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// The 3N terms of H = -(lambda/2) sum[(1+gamma) x_i x_{i+1} + (1-gamma) y_i y_{i+1}] + sum z_i
/// on a periodic ring: per site the xx bond, the yy bond, then the field term.
std::vector<PauliString> hamiltonian_terms(const ModelParams& params, int sites);

}  // namespace qpt
