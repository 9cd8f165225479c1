#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "elfib/lattice.hpp"

using namespace elfib;

namespace {

const FibrationModel& M() { return builtin_namikawa(); }

DivisorClass ns(int i) { return DivisorClass::basis(i); }
CurveClass h2c(int j) { return CurveClass::basis(j); }

// Fraction-free Bareiss elimination over __int128: an independent exact
// determinant oracle with no rational arithmetic and no Eigen decomposition.
__int128 bareiss_det(const PairingMatrix& p) {
  __int128 a[kNSRank][kH2Rank];
  for (int i = 0; i < kNSRank; ++i)
    for (int j = 0; j < kH2Rank; ++j) a[i][j] = p(i, j);
  __int128 sign = 1, prev = 1;
  for (int k = 0; k < kNSRank - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < kNSRank; ++r)
        if (a[r][k] != 0) { piv = r; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < kH2Rank; ++j) std::swap(a[k][j], a[piv][j]);
      sign = -sign;
    }
    for (int i = k + 1; i < kNSRank; ++i)
      for (int j = k + 1; j < kH2Rank; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[kNSRank - 1][kNSRank - 1];
}

}  // namespace

TEST_CASE("sample pairing entries of the built-in model") {
  CHECK(M().pairing(NSBasis::Section(0), H2Basis::ShatCurve(0)) == -1);
  CHECK(M().pairing(NSBasis::Section(0), H2Basis::FiberE) == 1);
  CHECK(M().pairing(NSBasis::PullbackFiber, H2Basis::ShatCurve(3)) == 1);
  CHECK(M().pairing(NSBasis::DPrimary, H2Basis::PA) == -1);
  CHECK(M().pairing(NSBasis::DPrimary, H2Basis::PB) == 0);
  CHECK(M().pairing(NSBasis::DSecondary, H2Basis::PB) == -1);
  CHECK(M().pairing(NSBasis::PullbackSection(0), H2Basis::LhatCurve(5)) == -1);
  CHECK(M().pairing(NSBasis::PullbackSection(4), H2Basis::ShatCurve(4)) == -1);
}

TEST_CASE("bilinearity on 1000 random vectors") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<Int> coeff(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    DivisorClass d1, d2;
    CurveClass c1, c2;
    for (int i = 0; i < kNSRank; ++i) { d1.c[i] = coeff(rng); d2.c[i] = coeff(rng); }
    for (int j = 0; j < kH2Rank; ++j) { c1.c[j] = coeff(rng); c2.c[j] = coeff(rng); }
    Int m = coeff(rng), n = coeff(rng);
    CHECK(pair_divisor_curve(m * d1 + n * d2, c1, M()) ==
          m * pair_divisor_curve(d1, c1, M()) + n * pair_divisor_curve(d2, c1, M()));
    CHECK(pair_divisor_curve(d1, m * c1 + n * c2, M()) ==
          m * pair_divisor_curve(d1, c1, M()) + n * pair_divisor_curve(d1, c2, M()));
  }
}

TEST_CASE("pushforward linearity on random curve expressions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> coeff(-5, 5);
  std::uniform_int_distribution<int> aux_id(0, AuxGen::Count - 1);
  for (int trial = 0; trial < 200; ++trial) {
    CurveExpression c1, c2;
    for (int j = 0; j < kH2Rank; ++j) { c1.pure.c[j] = coeff(rng); c2.pure.c[j] = coeff(rng); }
    for (int t = 0; t < 4; ++t) {
      c1 = c1 + CurveExpression::aux_gen(aux_id(rng), coeff(rng));
      c2 = c2 + CurveExpression::aux_gen(aux_id(rng), coeff(rng));
    }
    Int m = coeff(rng), n = coeff(rng);
    CHECK(pushforward(m * c1 + n * c2, M()) ==
          Rational(m) * pushforward(c1, M()) + Rational(n) * pushforward(c2, M()));
  }
}

TEST_CASE("divisor products from the table") {
  // pullback products
  CHECK(multiply_divisors(ns(NSBasis::PullbackFiber), ns(NSBasis::PullbackFiber), M()) ==
        CurveExpression{});
  CHECK(multiply_divisors(ns(NSBasis::PullbackFiber), ns(NSBasis::PullbackSection(0)), M()) ==
        CurveExpression(h2c(H2Basis::FiberE)));
  // disjoint pullback sections
  CHECK(multiply_divisors(ns(NSBasis::Section(3)), ns(NSBasis::Section(0)), M()) ==
        CurveExpression{});
  CHECK(multiply_divisors(ns(NSBasis::Section(3)), ns(NSBasis::Section(3)), M()) ==
        -1 * CurveExpression(h2c(H2Basis::FhatCurve)));
  // the two diagonal-type sections meet in shat0 plus the six fibral pairs
  CurveExpression dd1 = multiply_divisors(ns(NSBasis::DPrimary), ns(NSBasis::DSecondary), M());
  CHECK(dd1.str() == "shat0 + 6*PA + 6*PB");
  // self-products carry the genus-4 curve with a negative sign
  CurveExpression dd = multiply_divisors(ns(NSBasis::DPrimary), ns(NSBasis::DPrimary), M());
  CHECK(dd.str() == "3*shat0 - Chat + 2*fD");
}

TEST_CASE("products outside the stored table fail loudly") {
  CHECK_THROWS_WITH_AS(
      multiply_divisors(ns(NSBasis::PullbackSection(3)), ns(NSBasis::PullbackSection(4)), M()),
      doctest::Contains("pis3"), ProductUndefined);
}

TEST_CASE("pairing a curve with auxiliary content is rejected") {
  CurveExpression c = CurveExpression::aux_gen(AuxGen::ChatCurve);
  CHECK_THROWS_AS(pair_divisor_curve(ns(NSBasis::Section(0)), c, M()), ProductUndefined);
  // without aux content the overload delegates to the pure pairing
  CurveExpression pure(h2c(H2Basis::FiberE));
  CHECK(pair_divisor_curve(ns(NSBasis::Section(0)), pure, M()) == 1);
}

TEST_CASE("pushforward basis images") {
  CHECK(pushforward(CurveExpression(h2c(H2Basis::FiberE)), M()).is_zero());
  CHECK(pushforward(CurveExpression(h2c(H2Basis::FhatCurve)), M()) ==
        BaseClass::basis(BaseBasis::Fiber));
  CHECK(pushforward(CurveExpression(h2c(H2Basis::ShatCurve(3))), M()) ==
        BaseClass::basis(BaseBasis::Section(3)));
  CHECK(pushforward(CurveExpression(h2c(H2Basis::LhatCurve(5))), M()) ==
        BaseClass::basis(BaseBasis::Section(0)));
  CHECK(pushforward(CurveExpression(h2c(H2Basis::PA)), M()).is_zero());
  CHECK(pushforward(CurveExpression::aux_gen(AuxGen::ChatCurve), M()).str() == "3*f + 3*s0");
}

TEST_CASE("base intersection form") {
  BaseClass f = BaseClass::basis(BaseBasis::Fiber);
  BaseClass s0 = BaseClass::basis(BaseBasis::Section(0));
  BaseClass s3 = BaseClass::basis(BaseBasis::Section(3));
  CHECK(base_pair(f, f) == Rational(0));
  CHECK(base_pair(f, s3) == Rational(1));
  CHECK(base_pair(s3, s3) == Rational(-1));
  CHECK(base_pair(s0, s3) == Rational(0));
  CHECK(base_pair(Rational(2) * s0 + Rational(2) * f, Rational(2) * s0 + Rational(2) * f) ==
        Rational(4));
  CHECK(base_pair(s0 + f, s0 + f) == Rational(1));
}

TEST_CASE("pullback of base classes") {
  BaseClass b = Rational(2) * BaseClass::basis(BaseBasis::Fiber) +
                Rational(3) * BaseClass::basis(BaseBasis::Section(4));
  DivisorClass d = pullback(b);
  CHECK(d.c[NSBasis::PullbackFiber] == 2);
  CHECK(d.c[NSBasis::PullbackSection(4)] == 3);
  BaseClass half = Rational(1, 2) * BaseClass::basis(BaseBasis::Fiber);
  CHECK_THROWS_AS(pullback(half), StructuralError);
}

TEST_CASE("derived divisors reproduce the below-double-line rows") {
  DivisorClass d3 = derived_divisor(DerivedDivisor::DPlus3, M());
  DivisorClass d4 = derived_divisor(DerivedDivisor::DPlus4, M());
  CHECK(pair_divisor_curve(d3, h2c(H2Basis::FiberE), M()) == 1);
  CHECK(pair_divisor_curve(d3, h2c(H2Basis::PA), M()) == 1);
  CHECK(pair_divisor_curve(d3, h2c(H2Basis::PB), M()) == 0);
  CHECK(pair_divisor_curve(d4, h2c(H2Basis::PA), M()) == 0);
  CHECK(pair_divisor_curve(d4, h2c(H2Basis::PB), M()) == 1);
  CHECK(pair_divisor_curve(d4, h2c(H2Basis::FiberE), M()) == 1);
}

TEST_CASE("pairing determinant: exact LU against a Bareiss oracle") {
  Rational det = pairing_determinant(M());
  CHECK_FALSE(det.is_zero());
  __int128 oracle = bareiss_det(M().pairing);
  CHECK(det == Rational(static_cast<long>(static_cast<std::int64_t>(oracle))));
  // the lattice is non-degenerate but not unimodular
  CHECK(det == Rational(-81));
}
