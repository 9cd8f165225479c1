#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elfib/rational.hpp"

using elfib::Rational;

TEST_CASE("construction and canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(Rational(5, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);

  // no drift under repeated accumulation
  Rational sum(0);
  for (int i = 0; i < 300; ++i) sum += Rational(1, 300);
  CHECK(sum == Rational(1));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(elfib::abs(Rational(-7, 2)) == Rational(7, 2));
}

TEST_CASE("parse and str round-trip") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-8, 2).str() == "-4");
  CHECK(Rational(0).str() == "0");
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("to_int guards") {
  CHECK(Rational(-9).to_int() == -9);
  CHECK_THROWS_AS(Rational(1, 2).to_int(), std::domain_error);
}

TEST_CASE("large values stay exact") {
  Rational big = Rational::parse("123456789012345678901234567890");
  CHECK(big / big == Rational(1));
  CHECK((big * Rational(1, 3)) * Rational(3) == big);
}
