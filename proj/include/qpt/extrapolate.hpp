#pragma once

#include <span>

namespace qpt {

struct SizedValue {
  int sites;
  double value;
};

enum class ExtrapolationMethod { Geometric, Richardson, Bracket };

struct Extrapolation {
  double estimate;
  double uncertainty;  // |estimate - value at the largest size|
  ExtrapolationMethod method;
};

/// Thermodynamic-limit estimate from finite-ring values at ascending sizes.
/// Uses the last three sizes: value(N) = a + b r^N when the successive
/// differences shrink geometrically. Otherwise monotone sequences get linear
/// Richardson in 1/N on the last two sizes, and sequences whose differences
/// alternate in sign without shrinking get the midpoint of the last two.
/// Throws InsufficientPoints for fewer than three distinct sizes.
Extrapolation extrapolate_thermo(std::span<const SizedValue> values);

}  // namespace qpt
