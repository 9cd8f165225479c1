#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "elfib/classes.hpp"
#include "elfib/kodaira.hpp"

namespace elfib {

/// The base rational elliptic surface: Picard rank 10, -K = f, K^2 = 0.
struct BaseSurfaceData {
  int picard_rank = kBaseRank;
  BaseClass anticanonical;
  BaseFormMatrix intersection_form;
  Rational kb_squared = Rational(0);

  friend bool operator==(const BaseSurfaceData& a, const BaseSurfaceData& b) {
    return a.picard_rank == b.picard_rank && a.anticanonical == b.anticanonical &&
           a.intersection_form == b.intersection_form && a.kb_squared == b.kb_squared;
  }
};

/// One family of singular-fiber points: here the six Type IV points sitting
/// on cuspidal discriminant curves with generic Type II fibers.
struct FibralLocus {
  int multiplicity = 0;
  std::vector<CurveClass> component_curves;
  KodairaType fiber_type_at_point;
  KodairaType generic_fiber_type_on_curve;
  int stratum_euler_open_curve = 0;
  std::vector<std::pair<CurveClass, Int>> gv_invariants;

  friend bool operator==(const FibralLocus& a, const FibralLocus& b) {
    return a.multiplicity == b.multiplicity && a.component_curves == b.component_curves &&
           a.fiber_type_at_point == b.fiber_type_at_point &&
           a.generic_fiber_type_on_curve == b.generic_fiber_type_on_curve &&
           a.stratum_euler_open_curve == b.stratum_euler_open_curve &&
           a.gv_invariants == b.gv_invariants;
  }
};

struct HodgeData {
  int h11 = 0;
  int h21 = 0;
  friend bool operator==(const HodgeData&, const HodgeData&) = default;
};

/// The complete declarative fibration package.  Immutable after construction;
/// all operations over it are pure functions.
struct FibrationModel {
  // rows indexed by the NS basis, columns by the H2 basis
  PairingMatrix pairing = PairingMatrix::Zero();
  // symmetric product table on unordered NS-basis pairs; sparse by design
  std::map<std::pair<int, int>, CurveExpression> products;
  // pushforwards to Pic(B): one per H2 generator, one per auxiliary generator
  std::array<BaseClass, kH2Rank> h2_pushforward;
  std::array<BaseClass, AuxGen::Count> aux_pushforward;

  int zero_section = NSBasis::Section(0);
  std::array<int, kMWRank> mw_generators{};  // NS indices of S1..S8, D, D1
  int fiber_class = H2Basis::FiberE;

  BaseSurfaceData base;
  std::vector<FibralLocus> fibral_loci;
  int fibral_divisor_classes = 0;  // independent fibral divisors not pulled back

  HodgeData hodge;
  int euler = 0;

  friend bool operator==(const FibrationModel& a, const FibrationModel& b) {
    return a.pairing == b.pairing && a.products == b.products &&
           a.h2_pushforward == b.h2_pushforward && a.aux_pushforward == b.aux_pushforward &&
           a.zero_section == b.zero_section && a.mw_generators == b.mw_generators &&
           a.fiber_class == b.fiber_class && a.base == b.base &&
           a.fibral_loci == b.fibral_loci &&
           a.fibral_divisor_classes == b.fibral_divisor_classes && a.hodge == b.hodge &&
           a.euler == b.euler;
  }
};

/// The built-in Namikawa model: the full intersection table, the sparse
/// divisor-product table, pushforward data, 10 Mordell-Weil generators, six
/// Type IV loci, (h11, h21) = (21, 3), euler 36.
const FibrationModel& builtin_namikawa();

/// Standard intersection form of a rational elliptic surface on {f, s0..s8}:
/// f.f = 0, f.s_k = 1, s_j.s_k = -delta_jk.
BaseFormMatrix standard_base_form();

/// Structural invariants checked on load: dimensions, zero-section and section
/// axioms against the fiber class.  Throws StructuralError naming the invariant.
void validate_model(const FibrationModel& m);

}  // namespace elfib
