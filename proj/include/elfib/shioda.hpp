#pragma once

#include <array>

#include "elfib/lattice.hpp"

namespace elfib {

/// Image of a Mordell-Weil generator under the Shioda homomorphism:
///   sigma(S_a) = S_a - S0 - pullback(pushforward((S_a - S0) . S0)).
/// Orthogonal to the fiber class and, after product with S0, pushes to zero.
struct ShiodaImage {
  int generator_index = 0;  // 1..10
  DivisorClass divisor;
};

ShiodaImage shioda(int a, const FibrationModel& m);

/// Height pairing b_{a,b} = -pushforward(sigma(S_a) . sigma(S_b)), a divisor
/// class on the base.  Symmetric.
BaseClass height(int a, int b, const FibrationModel& m);

struct HeightMatrix {
  std::array<std::array<BaseClass, kMWRank>, kMWRank> entries;

  const BaseClass& operator()(int a, int b) const { return entries[a - 1][b - 1]; }
};

HeightMatrix height_matrix(const FibrationModel& m);

/// U(1)_a charge of a curve: its pairing with the a-th Shioda image.
Int charge(int a, const CurveClass& c, const FibrationModel& m);

/// Shioda-Tate rank: h11(X) - rk Pic(B) - 1 - (fibral divisor classes).
int shioda_tate_rank(const FibrationModel& m);

}  // namespace elfib
