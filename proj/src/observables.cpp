#include "qpt/observables.hpp"

#include <string>

#include "qpt/error.hpp"

namespace qpt {

GapSet gaps_from_correlators(const ModelParams& params, const CorrelatorSet& c) {
  validate(params);
  const double g = params.gamma;
  const double l = params.lambda;
  return {
      2.0 * l * (1.0 - g) * c.g_yy - 2.0 * c.m_z,
      2.0 * l * (1.0 + g) * c.g_xx - 2.0 * c.m_z,
      2.0 * l * ((1.0 + g) * c.g_xx + (1.0 - g) * c.g_yy),
  };
}

AccelSet accels_from_correlators(const ModelParams& params, const CorrelatorSet& c) {
  validate(params);
  const double g = params.gamma;
  const double ratio = g / params.lambda;
  const double plane_sum = c.g_xx + c.g_yy;
  return {
      -c.m_z + ratio * plane_sum - (1.0 + g) / 2.0 * c.g_xzx + g * (1.0 - g) / 2.0 * c.g_yzy,
      -c.m_z - ratio * plane_sum - g * (1.0 + g) / 2.0 * c.g_xzx - (1.0 - g) / 2.0 * c.g_yzy,
      g * g * c.m_z - ratio * (c.g_xx - c.g_yy) + (1.0 + g) / 2.0 * c.g_xzx + (1.0 - g) / 2.0 * c.g_yzy,
  };
}

std::string_view name(Observable o) {
  switch (o) {
    case Observable::GapX: return "dEx";
    case Observable::GapY: return "dEy";
    case Observable::GapZ: return "dEz";
    case Observable::AccelX: return "Lx";
    case Observable::AccelY: return "Ly";
    case Observable::AccelZ: return "Lz";
    case Observable::Mz: return "m_z";
    case Observable::Gxx: return "g_xx";
    case Observable::Gyy: return "g_yy";
    case Observable::Gxzx: return "g_xzx";
    case Observable::Gyzy: return "g_yzy";
  }
  return "?";
}

std::optional<Observable> parse_observable(std::string_view text) {
  if (text == "dLx") return Observable::AccelX;
  if (text == "dLy") return Observable::AccelY;
  if (text == "dLz") return Observable::AccelZ;
  for (auto o : kGapAndAccelObservables) {
    if (name(o) == text) return o;
  }
  for (auto o : kCorrelatorObservables) {
    if (name(o) == text) return o;
  }
  return std::nullopt;
}

double evaluate(Observable o, const ModelParams& params, const CorrelatorSet& c) {
  switch (o) {
    case Observable::GapX: return gaps_from_correlators(params, c).de_x;
    case Observable::GapY: return gaps_from_correlators(params, c).de_y;
    case Observable::GapZ: return gaps_from_correlators(params, c).de_z;
    case Observable::AccelX: return accels_from_correlators(params, c).lam_x;
    case Observable::AccelY: return accels_from_correlators(params, c).lam_y;
    case Observable::AccelZ: return accels_from_correlators(params, c).lam_z;
    case Observable::Mz: return c.m_z;
    case Observable::Gxx: return c.g_xx;
    case Observable::Gyy: return c.g_yy;
    case Observable::Gxzx: return c.g_xzx;
    case Observable::Gyzy: return c.g_yzy;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown observable");
}

}  // namespace qpt
