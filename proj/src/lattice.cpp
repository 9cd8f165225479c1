#include "elfib/lattice.hpp"

#include <Eigen/LU>

namespace elfib {

Int pair_divisor_curve(const DivisorClass& d, const CurveClass& c, const FibrationModel& m) {
  Int out = 0;
  for (int i = 0; i < kNSRank; ++i) {
    if (d.c[i] == 0) continue;
    for (int j = 0; j < kH2Rank; ++j) out += d.c[i] * m.pairing(i, j) * c.c[j];
  }
  return out;
}

Int pair_divisor_curve(const DivisorClass& d, const CurveExpression& c, const FibrationModel& m) {
  if (c.has_aux())
    throw ProductUndefined("cannot pair a divisor with an expression carrying "
                           "auxiliary curve generators");
  return pair_divisor_curve(d, c.pure, m);
}

CurveExpression multiply_divisors(const DivisorClass& d1, const DivisorClass& d2,
                                  const FibrationModel& m) {
  CurveExpression out;
  for (int i = 0; i < kNSRank; ++i) {
    if (d1.c[i] == 0) continue;
    for (int j = 0; j < kNSRank; ++j) {
      if (d2.c[j] == 0) continue;
      auto key = std::minmax(i, j);
      auto it = m.products.find({key.first, key.second});
      if (it == m.products.end())
        throw ProductUndefined("no product defined for basis pair (" + ns_names()[i] +
                               ", " + ns_names()[j] + ")");
      out.add_scaled(it->second, d1.c[i] * d2.c[j]);
    }
  }
  return out;
}

BaseClass pushforward(const CurveExpression& c, const FibrationModel& m) {
  BaseClass out;
  for (int j = 0; j < kH2Rank; ++j)
    if (c.pure.c[j] != 0) out = out + Rational(c.pure.c[j]) * m.h2_pushforward[j];
  for (const auto& [id, coeff] : c.aux)
    out = out + Rational(coeff) * m.aux_pushforward[id];
  return out;
}

Rational base_pair(const BaseClass& b1, const BaseClass& b2, const BaseFormMatrix& form) {
  Rational out(0);
  for (int i = 0; i < kBaseRank; ++i) {
    if (b1.c[i].is_zero()) continue;
    for (int j = 0; j < kBaseRank; ++j) out += b1.c[i] * form(i, j) * b2.c[j];
  }
  return out;
}

Rational base_pair(const BaseClass& b1, const BaseClass& b2) {
  static const BaseFormMatrix form = standard_base_form();
  return base_pair(b1, b2, form);
}

DivisorClass pullback(const BaseClass& b) {
  DivisorClass out;
  for (int i = 0; i < kBaseRank; ++i) {
    if (b.c[i].is_zero()) continue;
    if (!b.c[i].is_integer())
      throw StructuralError("pullback requires integer coefficients, got " +
                            b.c[i].str() + " on " + base_names()[i]);
    Int coeff = b.c[i].to_int();
    int target = (i == BaseBasis::Fiber) ? NSBasis::PullbackFiber
                                         : NSBasis::PullbackSection(i - 1);
    out.c[target] += coeff;
  }
  return out;
}

DivisorClass derived_divisor(DerivedDivisor which, const FibrationModel& m) {
  DivisorClass out = 2 * DivisorClass::basis(NSBasis::PullbackFiber) +
                     2 * DivisorClass::basis(NSBasis::PullbackSection(0)) +
                     2 * DivisorClass::basis(m.zero_section);
  int sub = which == DerivedDivisor::DPlus3 ? NSBasis::DPrimary : NSBasis::DSecondary;
  return out - DivisorClass::basis(sub);
}

Rational pairing_determinant(const FibrationModel& m) {
  Eigen::Matrix<Rational, kNSRank, kH2Rank> q;
  for (int i = 0; i < kNSRank; ++i)
    for (int j = 0; j < kH2Rank; ++j) q(i, j) = Rational(m.pairing(i, j));
  return Eigen::FullPivLU<Eigen::Matrix<Rational, kNSRank, kH2Rank>>(q).determinant();
}

}  // namespace elfib
