#include "elfib/model.hpp"

namespace elfib {

BaseFormMatrix standard_base_form() {
  BaseFormMatrix form = BaseFormMatrix::Constant(Rational(0));
  for (int k = 0; k < 9; ++k) {
    form(BaseBasis::Fiber, BaseBasis::Section(k)) = Rational(1);
    form(BaseBasis::Section(k), BaseBasis::Fiber) = Rational(1);
    form(BaseBasis::Section(k), BaseBasis::Section(k)) = Rational(-1);
  }
  return form;
}

namespace {

BaseClass base_f() { return BaseClass::basis(BaseBasis::Fiber); }
BaseClass base_s(int k) { return BaseClass::basis(BaseBasis::Section(k)); }

CurveExpression h2(int i, Int c = 1) { return c * CurveExpression(CurveClass::basis(i)); }
CurveExpression aux(int id, Int c = 1) { return CurveExpression::aux_gen(id, c); }

void set_product(FibrationModel& m, int a, int b, CurveExpression e) {
  if (a > b) std::swap(a, b);
  m.products[{a, b}] = std::move(e);
}

// The intersection table: rows pif, pis0, pisk, S0, Sl, D, D1 against columns
// E, fhat, shat, lhat, PA, PB.  Generic-index rows are expanded to all
// concrete indices; the Kronecker deltas land on matching indices.
PairingMatrix build_pairing() {
  PairingMatrix p = PairingMatrix::Zero();
  const int E = H2Basis::FiberE, fh = H2Basis::FhatCurve;
  const int PA = H2Basis::PA, PB = H2Basis::PB;

  // pif:  . shat_k = 1, . lhat_l = 1
  for (int k = 0; k < 9; ++k) p(NSBasis::PullbackFiber, H2Basis::ShatCurve(k)) = 1;
  for (int l = 1; l <= 8; ++l) p(NSBasis::PullbackFiber, H2Basis::LhatCurve(l)) = 1;

  // pis0:  . fhat = 1, . shat0 = -1, . lhat_l = -1
  p(NSBasis::PullbackSection(0), fh) = 1;
  p(NSBasis::PullbackSection(0), H2Basis::ShatCurve(0)) = -1;
  for (int l = 1; l <= 8; ++l) p(NSBasis::PullbackSection(0), H2Basis::LhatCurve(l)) = -1;

  // pisk (k >= 1):  . fhat = 1, . shat_k = -1
  for (int k = 1; k <= 8; ++k) {
    p(NSBasis::PullbackSection(k), fh) = 1;
    p(NSBasis::PullbackSection(k), H2Basis::ShatCurve(k)) = -1;
  }

  // S0:  . E = 1, . shat_k = -1 for every k
  p(NSBasis::Section(0), E) = 1;
  for (int k = 0; k < 9; ++k) p(NSBasis::Section(0), H2Basis::ShatCurve(k)) = -1;

  // Sl (l >= 1):  . E = 1, . lhat_l = -1
  for (int l = 1; l <= 8; ++l) {
    p(NSBasis::Section(l), E) = 1;
    p(NSBasis::Section(l), H2Basis::LhatCurve(l)) = -1;
  }

  // D:  . E = 1, . fhat = 1, . shat0 = -1, . PA = -1
  p(NSBasis::DPrimary, E) = 1;
  p(NSBasis::DPrimary, fh) = 1;
  p(NSBasis::DPrimary, H2Basis::ShatCurve(0)) = -1;
  p(NSBasis::DPrimary, PA) = -1;

  // D1:  . E = 1, . fhat = 1, . shat0 = -1, . PB = -1
  p(NSBasis::DSecondary, E) = 1;
  p(NSBasis::DSecondary, fh) = 1;
  p(NSBasis::DSecondary, H2Basis::ShatCurve(0)) = -1;
  p(NSBasis::DSecondary, PB) = -1;

  return p;
}

// Sparse product table: exactly the pairs the Shioda pipeline needs
// (pullbacks of f and s0, the eleven sections, D, D1).
void build_products(FibrationModel& m) {
  const int pif = NSBasis::PullbackFiber;
  const int pis0 = NSBasis::PullbackSection(0);
  const int D = NSBasis::DPrimary, D1 = NSBasis::DSecondary;

  // pullback products: pif.pif = 0, pif.pis0 = E, pis0.pis0 = -E
  set_product(m, pif, pif, CurveExpression{});
  set_product(m, pif, pis0, h2(H2Basis::FiberE));
  set_product(m, pis0, pis0, h2(H2Basis::FiberE, -1));

  // pif restricted to sections
  set_product(m, pif, NSBasis::Section(0), h2(H2Basis::FhatCurve));
  for (int k = 1; k <= 8; ++k)
    set_product(m, pif, NSBasis::Section(k), aux(AuxGen::FiberOverF_S(k)));
  set_product(m, pif, D, aux(AuxGen::FiberOverF_D));
  set_product(m, pif, D1, aux(AuxGen::FiberOverF_D1));

  // pis0 restricted to sections
  set_product(m, pis0, NSBasis::Section(0), h2(H2Basis::ShatCurve(0)));
  for (int l = 1; l <= 8; ++l)
    set_product(m, pis0, NSBasis::Section(l), h2(H2Basis::LhatCurve(l)));
  set_product(m, pis0, D, aux(AuxGen::SectionOverS0_D));
  set_product(m, pis0, D1, aux(AuxGen::SectionOverS0_D1));

  // the nine pulled-back sections: self-product -fhat, pairwise disjoint
  for (int k = 0; k < 9; ++k)
    for (int l = k; l < 9; ++l)
      set_product(m, NSBasis::Section(k), NSBasis::Section(l),
                  k == l ? h2(H2Basis::FhatCurve, -1) : CurveExpression{});

  // sections against the diagonal-type sections
  set_product(m, NSBasis::Section(0), D, h2(H2Basis::ShatCurve(0)));
  set_product(m, NSBasis::Section(0), D1, h2(H2Basis::ShatCurve(0)));
  for (int k = 1; k <= 8; ++k) {
    set_product(m, NSBasis::Section(k), D, aux(AuxGen::FCurve(k)));
    set_product(m, NSBasis::Section(k), D1, aux(AuxGen::F1Curve(k)));
  }

  // D . D1 = shat0 + sum_j (PA_j + PB_j), the six pairs in one class each
  set_product(m, D, D1, h2(H2Basis::ShatCurve(0)) + h2(H2Basis::PA, 6) + h2(H2Basis::PB, 6));

  // self-products: D.D = 2 (pif.D) + 3 shat0 - Chat, likewise for D1
  set_product(m, D, D,
              aux(AuxGen::FiberOverF_D, 2) + h2(H2Basis::ShatCurve(0), 3) +
                  aux(AuxGen::ChatCurve, -1));
  set_product(m, D1, D1,
              aux(AuxGen::FiberOverF_D1, 2) + h2(H2Basis::ShatCurve(0), 3) +
                  aux(AuxGen::ChatCurve, -1));
}

void build_pushforwards(FibrationModel& m) {
  // basis curves: E -> 0, fhat -> f, shat_k -> s_k, lhat_l -> s0, PA/PB -> 0
  m.h2_pushforward[H2Basis::FiberE] = BaseClass::zero();
  m.h2_pushforward[H2Basis::FhatCurve] = base_f();
  for (int k = 0; k < 9; ++k) m.h2_pushforward[H2Basis::ShatCurve(k)] = base_s(k);
  for (int l = 1; l <= 8; ++l) m.h2_pushforward[H2Basis::LhatCurve(l)] = base_s(0);
  m.h2_pushforward[H2Basis::PA] = BaseClass::zero();
  m.h2_pushforward[H2Basis::PB] = BaseClass::zero();

  // auxiliary generators: each carries exactly one declared pushforward
  m.aux_pushforward[AuxGen::ChatCurve] = Rational(3) * (base_s(0) + base_f());
  m.aux_pushforward[AuxGen::FiberOverF_D] = base_f();
  m.aux_pushforward[AuxGen::FiberOverF_D1] = base_f();
  for (int k = 1; k <= 8; ++k) m.aux_pushforward[AuxGen::FiberOverF_S(k)] = base_f();
  m.aux_pushforward[AuxGen::SectionOverS0_D] = base_s(0);
  m.aux_pushforward[AuxGen::SectionOverS0_D1] = base_s(0);
  for (int k = 1; k <= 8; ++k) {
    m.aux_pushforward[AuxGen::FCurve(k)] = base_s(k);
    m.aux_pushforward[AuxGen::F1Curve(k)] = base_s(k);
  }
}

FibrationModel build_namikawa() {
  FibrationModel m;
  m.pairing = build_pairing();
  build_products(m);
  build_pushforwards(m);

  m.zero_section = NSBasis::Section(0);
  for (int l = 1; l <= 8; ++l) m.mw_generators[l - 1] = NSBasis::Section(l);
  m.mw_generators[8] = NSBasis::DPrimary;
  m.mw_generators[9] = NSBasis::DSecondary;
  m.fiber_class = H2Basis::FiberE;

  m.base.picard_rank = kBaseRank;
  m.base.anticanonical = base_f();
  m.base.intersection_form = standard_base_form();
  m.base.kb_squared = Rational(0);

  // six Type IV points on cuspidal (Type II) discriminant curves; the three
  // fibral curves PA, PB, PA+PB are super-rigid with GV invariant 1
  FibralLocus locus;
  locus.multiplicity = 6;
  CurveClass pa = CurveClass::basis(H2Basis::PA);
  CurveClass pb = CurveClass::basis(H2Basis::PB);
  locus.component_curves = {pa, pb, pa + pb};
  locus.fiber_type_at_point = KodairaType{KodairaTag::IV, 0};
  locus.generic_fiber_type_on_curve = KodairaType{KodairaTag::II, 0};
  locus.stratum_euler_open_curve = 1;  // cuspidal rational curve minus one point
  locus.gv_invariants = {{pa, 1}, {pb, 1}, {pa + pb, 1}};
  m.fibral_loci.push_back(std::move(locus));
  m.fibral_divisor_classes = 0;

  m.hodge = HodgeData{21, 3};
  m.euler = 36;
  return m;
}

}  // namespace

const FibrationModel& builtin_namikawa() {
  static const FibrationModel m = build_namikawa();
  return m;
}

void validate_model(const FibrationModel& m) {
  if (m.zero_section < 0 || m.zero_section >= kNSRank)
    throw StructuralError("zero section index out of range");
  if (m.fiber_class < 0 || m.fiber_class >= kH2Rank)
    throw StructuralError("fiber class index out of range");
  if (m.pairing(m.zero_section, m.fiber_class) != 1)
    throw StructuralError("zero section must meet fiber once");
  for (int a = 0; a < kMWRank; ++a) {
    int g = m.mw_generators[a];
    if (g < 0 || g >= kNSRank) throw StructuralError("MW generator index out of range");
    if (m.pairing(g, m.fiber_class) != 1)
      throw StructuralError("section axiom: MW generator " + ns_names()[g] +
                            " must meet fiber once");
  }
  for (const auto& locus : m.fibral_loci) {
    if (locus.multiplicity <= 0) throw StructuralError("fibral locus multiplicity must be positive");
    for (const auto& [c, n] : locus.gv_invariants)
      if (n < 0) throw StructuralError("negative GV invariant");
  }
}

}  // namespace elfib
