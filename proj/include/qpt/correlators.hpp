#pragma once

#include <array>
#include <string_view>

namespace qpt {

/// Ground-state expectations every observable is assembled from:
/// <z_k>, <x_k x_{k+1}>, <y_k y_{k+1}>, <x_{k-1} z_k x_{k+1}>, <y_{k-1} z_k y_{k+1}>.
struct CorrelatorSet {
  double m_z = 0.0;
  double g_xx = 0.0;
  double g_yy = 0.0;
  double g_xzx = 0.0;
  double g_yzy = 0.0;

  std::array<double, 5> as_array() const { return {m_z, g_xx, g_yy, g_xzx, g_yzy}; }
  static CorrelatorSet from_array(const std::array<double, 5>& v) { return {v[0], v[1], v[2], v[3], v[4]}; }

  friend CorrelatorSet operator+(const CorrelatorSet& a, const CorrelatorSet& b) {
    return {a.m_z + b.m_z, a.g_xx + b.g_xx, a.g_yy + b.g_yy, a.g_xzx + b.g_xzx, a.g_yzy + b.g_yzy};
  }
  friend CorrelatorSet operator*(double s, const CorrelatorSet& c) {
    return {s * c.m_z, s * c.g_xx, s * c.g_yy, s * c.g_xzx, s * c.g_yzy};
  }
};

inline constexpr std::array<std::string_view, 5> kCorrelatorNames = {"m_z", "g_xx", "g_yy", "g_xzx", "g_yzy"};

}  // namespace qpt
