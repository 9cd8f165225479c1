#include "elfib/shioda.hpp"

namespace elfib {

ShiodaImage shioda(int a, const FibrationModel& m) {
  if (a < 1 || a > kMWRank) throw StructuralError("Shioda index must be 1..10");
  DivisorClass sa = DivisorClass::basis(m.mw_generators[a - 1]);
  DivisorClass s0 = DivisorClass::basis(m.zero_section);
  DivisorClass diff = sa - s0;
  BaseClass correction = pushforward(multiply_divisors(diff, s0, m), m);
  return ShiodaImage{a, diff - pullback(correction)};
}

BaseClass height(int a, int b, const FibrationModel& m) {
  DivisorClass sa = shioda(a, m).divisor;
  DivisorClass sb = shioda(b, m).divisor;
  return -pushforward(multiply_divisors(sa, sb, m), m);
}

HeightMatrix height_matrix(const FibrationModel& m) {
  std::array<DivisorClass, kMWRank> sig;
  for (int a = 1; a <= kMWRank; ++a) sig[a - 1] = shioda(a, m).divisor;
  HeightMatrix h;
  for (int a = 1; a <= kMWRank; ++a)
    for (int b = a; b <= kMWRank; ++b) {
      BaseClass v = -pushforward(multiply_divisors(sig[a - 1], sig[b - 1], m), m);
      h.entries[a - 1][b - 1] = v;
      h.entries[b - 1][a - 1] = v;
    }
  return h;
}

Int charge(int a, const CurveClass& c, const FibrationModel& m) {
  return pair_divisor_curve(shioda(a, m).divisor, c, m);
}

int shioda_tate_rank(const FibrationModel& m) {
  return m.hodge.h11 - m.base.picard_rank - 1 - m.fibral_divisor_classes;
}

}  // namespace elfib
