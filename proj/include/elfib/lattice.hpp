#pragma once

#include "elfib/classes.hpp"
#include "elfib/model.hpp"

namespace elfib {

struct ProductUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bilinear pairing NS x H2 -> Z through the model's 21x21 pairing matrix.
Int pair_divisor_curve(const DivisorClass& d, const CurveClass& c, const FibrationModel& m);

/// Same, rejecting curve expressions with a nonzero auxiliary part (those have
/// no H2 expansion, so no pairing).
Int pair_divisor_curve(const DivisorClass& d, const CurveExpression& c, const FibrationModel& m);

/// Symmetric divisor product, extended bilinearly from the model's sparse
/// product table.  Throws ProductUndefined naming the missing basis pair.
CurveExpression multiply_divisors(const DivisorClass& d1, const DivisorClass& d2,
                                  const FibrationModel& m);

/// Linear pushforward to Pic(B): basis images from the model plus the declared
/// auxiliary pushforwards.
BaseClass pushforward(const CurveExpression& c, const FibrationModel& m);

/// Intersection form on Pic(B) in the standard form.
Rational base_pair(const BaseClass& b1, const BaseClass& b2);
/// Intersection form of an explicit base surface.
Rational base_pair(const BaseClass& b1, const BaseClass& b2, const BaseFormMatrix& form);

/// Pullback Pic(B) -> NS(X): f -> pif, s_k -> pisk.  Requires integer
/// coefficients; anything else fails loudly.
DivisorClass pullback(const BaseClass& b);

enum class DerivedDivisor { DPlus3, DPlus4 };

/// The two below-double-line sections, rearranged from the linear-equivalence
/// relation: 2 pif + 2 pis0 + 2 S0 - D (resp. - D1).
DivisorClass derived_divisor(DerivedDivisor which, const FibrationModel& m);

/// Exact determinant of the model's pairing matrix over the rationals.
Rational pairing_determinant(const FibrationModel& m);

}  // namespace elfib
