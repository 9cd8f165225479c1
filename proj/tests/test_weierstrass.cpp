#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elfib/weierstrass.hpp"

using namespace elfib;

namespace {

std::vector<PencilRoot<QOmega>> six_roots() {
  return {{QOmega(0), QOmega(1)}, {QOmega(1), QOmega(1)}, {QOmega(1), QOmega(2)},
          {QOmega(1), QOmega(3)}, {QOmega(1), QOmega(4)}, {QOmega(1), QOmega(5)}};
}

}  // namespace

TEST_CASE("Q(w) field arithmetic") {
  QOmega w = QOmega::omega();
  CHECK(w * w == -QOmega(1) - w);          // minimal polynomial
  CHECK(w * w * w == QOmega(1));           // cube root of unity
  CHECK(QOmega(1) + w + w * w == QOmega(0));
  QOmega x(Rational(2), Rational(-3));
  CHECK(x / x == QOmega(1));
  CHECK((x * w) / w == x);
  CHECK_THROWS_AS(x / QOmega(0), std::domain_error);
}

TEST_CASE("Hesse pencil base points lie on both cubics") {
  HessePencil h = hesse_pencil();
  REQUIRE(h.base_points.size() == 9);
  for (const auto& p : h.base_points) {
    CHECK(h.F.evaluate(p).is_zero());
    CHECK(h.G.evaluate(p).is_zero());
  }
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j)
      CHECK_FALSE(proj_equal(h.base_points[i], h.base_points[j]));
}

TEST_CASE("built Weierstrass model: beta has degree 18 and alpha vanishes") {
  HessePencil h = hesse_pencil();
  auto w = build_namikawa_p2(h.F, h.G, h.base_points, six_roots());
  CHECK(w.alpha.is_zero());
  CHECK(w.beta.degree() == 18);
  CHECK(w.base_points.size() == 9);
}

TEST_CASE("vanishing type (*, 6, 12) at all nine base points") {
  HessePencil h = hesse_pencil();
  auto w = build_namikawa_p2(h.F, h.G, h.base_points, six_roots());
  for (const auto& p : w.base_points) {
    VanishingTriple t = vanishing_triple(w.alpha, w.beta, p);
    CHECK(t.ord_a == kInfiniteOrder);
    CHECK(t.ord_b == 6);
    CHECK(t.ord_delta == 12);
    CHECK(kodaira_classify(t).tag == KodairaTag::NonMinimal);
  }
}

TEST_CASE("generic points of one discriminant component are Type II") {
  HessePencil h = hesse_pencil();
  auto w = build_namikawa_p2(h.F, h.G, h.base_points, six_roots());
  // the root [0:1] keeps G = s t u itself as a component; these points sit on
  // it, away from the base locus and off the other five members
  std::vector<ProjPoint<QOmega>> samples = {
      {QOmega(1), QOmega(1), QOmega(0)},
      {QOmega(1), QOmega(2), QOmega(0)},
      {QOmega(2), QOmega(1), QOmega(0)},
      {QOmega(0), QOmega(1), QOmega(1)},
      {QOmega(1), QOmega(0), QOmega(3)}};
  for (const auto& p : samples) {
    VanishingTriple t = vanishing_triple(w.alpha, w.beta, p);
    CHECK(t.ord_b == 1);
    CHECK(t.ord_delta == 2);
    CHECK(kodaira_classify(t) == KodairaType{KodairaTag::II, 0});
  }
  // a point on no component at all is smooth
  VanishingTriple off = vanishing_triple(w.alpha, w.beta,
                                         {QOmega(1), QOmega(2), QOmega(3)});
  CHECK(kodaira_classify(off).tag == KodairaTag::I0smooth);
}

TEST_CASE("input validation") {
  HessePencil h = hesse_pencil();

  SUBCASE("repeated pencil parameter") {
    auto roots = six_roots();
    roots[5] = roots[0];
    CHECK_THROWS_WITH_AS(build_namikawa_p2(h.F, h.G, h.base_points, roots),
                         doctest::Contains("b not squarefree"), PolyError);
    // projectively equal parameters are caught too
    roots[5] = {QOmega(2), QOmega(2)};
    roots[0] = {QOmega(1), QOmega(1)};
    CHECK_THROWS_WITH_AS(build_namikawa_p2(h.F, h.G, h.base_points, roots),
                         doctest::Contains("b not squarefree"), PolyError);
  }

  SUBCASE("bad base locus") {
    auto pts = h.base_points;
    pts[0] = {QOmega(1), QOmega(2), QOmega(3)};  // not on the pencil
    CHECK_THROWS_AS(build_namikawa_p2(h.F, h.G, pts, six_roots()), PolyError);
    pts = h.base_points;
    pts[1] = pts[0];  // repeated point
    CHECK_THROWS_WITH_AS(build_namikawa_p2(h.F, h.G, pts, six_roots()),
                         doctest::Contains("9 distinct points"), PolyError);
  }

  SUBCASE("non-cubic pencil member") {
    auto quad = Poly<QOmega>::variable(3, 0) * Poly<QOmega>::variable(3, 1);
    CHECK_THROWS_AS(build_namikawa_p2(quad, h.G, h.base_points, six_roots()), PolyError);
  }
}
