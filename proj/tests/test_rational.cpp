#include "delsarte/rational.hpp"

#include <doctest.h>

#include <random>

using delsarte::Integer;
using delsarte::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(304, 3).str() == "304/3");
  CHECK(Rational(4, -2).str() == "-2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(2, 3) == Rational(1));
  CHECK(Rational(2048, 3) - Rational(1730, 3) == Rational(106));
  CHECK(Rational(52) + Rational(304, 3) == Rational(460, 3));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("comparison is a total order by cross-multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2048, 3) > Rational(682));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("textual round-trip and parsing") {
  CHECK(Rational::parse("304/3") == Rational(304, 3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (int t = 0; t < 200; ++t) {
    Rational x(num(rng), den(rng));
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  auto rnd = [&] { return Rational(num(rng), den(rng)); };
  for (int t = 0; t < 200; ++t) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    // canonical-form idempotence
    CHECK(Rational(a.numerator(), a.denominator()) == a);
    if (!c.is_zero())
      CHECK((a / c) * c == a);
  }
}
