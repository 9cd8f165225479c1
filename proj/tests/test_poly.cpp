#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "elfib/poly.hpp"

using namespace elfib;

namespace {

using P = Poly<Rational>;

P var(int i) { return P::variable(3, i); }

// a random nonzero homogeneous polynomial of the given degree
P random_homogeneous(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  P p = P::zero(3);
  bool nonzero = false;
  while (!nonzero) {
    p = P::zero(3);
    for (int i = 0; i + 0 <= degree; ++i)
      for (int j = 0; i + j <= degree; ++j) {
        int c = coeff(rng);
        if (c == 0) continue;
        p = p + P::monomial(3, {i, j, degree - i - j}, Rational(c));
        nonzero = true;
      }
  }
  return p;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  P s = var(0), t = var(1);
  CHECK((s + t) * (s - t) == s * s - t * t);
  CHECK((s * P::zero(3)).is_zero());
  CHECK((s + t).pow(2) == s * s + Rational(2) * (s * t) + t * t);
  CHECK(P::constant(3, Rational(0)).is_zero());
}

TEST_CASE("homogeneity is enforced on addition") {
  P s = var(0);
  CHECK_THROWS_AS(s + s * s, PolyError);
  CHECK((s * s + s * var(1)).degree() == 2);
}

TEST_CASE("compose tracks degree") {
  // binary sextic composed with two cubics gives degree 18
  P l0 = Poly<Rational>::variable(2, 0), l1 = Poly<Rational>::variable(2, 1);
  P sextic = l0.pow(6) + l0.pow(3) * l1.pow(3) + l1.pow(6);
  P F = var(0).pow(3) + var(1).pow(3) + var(2).pow(3);
  P G = var(0) * var(1) * var(2);
  P composed = sextic.compose({F, G});
  CHECK(composed.degree() == 18);
  CHECK_FALSE(composed.is_affine());
}

TEST_CASE("evaluation") {
  P p = var(0).pow(2) * var(1) - Rational(3) * var(2).pow(3);
  CHECK(p.evaluate({Rational(2), Rational(5), Rational(1)}) == Rational(17));
}

TEST_CASE("vanishing order examples") {
  P s = var(0), t = var(1), u = var(2);
  CHECK(vanishing_order(s * s * t, {Rational(0), Rational(1), Rational(0)}) == 2);
  CHECK(vanishing_order(s + t, {Rational(1), Rational(1), Rational(1)}) == 0);
  CHECK(vanishing_order((s - t).pow(3) * u, {Rational(1), Rational(1), Rational(1)}) == 3);
  CHECK(vanishing_order(P::zero(3), {Rational(1), Rational(0), Rational(0)}) == kInfiniteOrder);
  CHECK_THROWS_AS(vanishing_order(s, {Rational(0), Rational(0), Rational(0)}), PolyError);
}

TEST_CASE("vanishing-order multiplicativity on 200 random pairs") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> deg(1, 3);
  std::uniform_int_distribution<int> coord(-2, 2);
  int done = 0;
  while (done < 200) {
    P p = random_homogeneous(rng, deg(rng));
    P q = random_homogeneous(rng, deg(rng));
    std::vector<Rational> point = {Rational(coord(rng)), Rational(coord(rng)),
                                   Rational(coord(rng))};
    if (scalar_is_zero(point[0]) && scalar_is_zero(point[1]) && scalar_is_zero(point[2]))
      continue;
    CHECK(vanishing_order(p * q, point) ==
          vanishing_order(p, point) + vanishing_order(q, point));
    ++done;
  }
}

TEST_CASE("discriminant") {
  P beta6 = var(0).pow(6) + var(1).pow(6);
  P delta = discriminant(P::zero(3), beta6);
  CHECK(delta == Rational(27) * beta6 * beta6);
  CHECK(delta.degree() == 12);
  P alpha4 = var(0).pow(4);
  CHECK(discriminant(alpha4, beta6).degree() == 12);
  P alpha2 = var(0).pow(2);
  CHECK_THROWS_AS(discriminant(alpha2, beta6), PolyError);
  // constants: the cuspidal-boundary normal form 4(-3)^3 + 27*2^2 = 0
  CHECK(discriminant(P::constant(3, Rational(-3)), P::constant(3, Rational(2))).is_zero());
}

TEST_CASE("for alpha = 0, ord delta is twice ord beta") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    P beta = random_homogeneous(rng, 3);
    std::vector<Rational> point = {Rational(1), Rational(trial % 5 - 2), Rational(1)};
    int ob = vanishing_order(beta, point);
    CHECK(vanishing_order(discriminant(P::zero(3), beta), point) == 2 * ob);
  }
}

TEST_CASE("parse and canonical format") {
  P F = parse_poly("s^3 + t^3 + u^3");
  CHECK(F.degree() == 3);
  CHECK(F.term_count() == 3);
  CHECK(format_poly(F) == "s^3 + t^3 + u^3");
  P mix = parse_poly("2*s^2*t - 1/3*u^3 + t*t*t");
  CHECK(mix.degree() == 3);
  CHECK(format_poly(parse_poly(format_poly(mix))) == format_poly(mix));
  CHECK(parse_poly("0").is_zero());
  CHECK(format_poly(P::zero(3)) == "0");
  CHECK_THROWS_AS(parse_poly("s + t^2"), PolyError);  // inhomogeneous
  CHECK_THROWS_AS(parse_poly("w^2"), PolyError);      // unknown variable
}
