#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcycle/rational.hpp"
#include "qcycle/rng.hpp"

using qcycle::Rational;

TEST_CASE("reduction and sign normalization") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(-6, 8) == Rational(-3, 4));
  CHECK(Rational(6, -8) == Rational(-3, 4));
  CHECK(Rational(-6, -8) == Rational(3, 4));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, -5).den() == 1);
}

TEST_CASE("arithmetic spot values") {
  CHECK(Rational(5, 6) + Rational(1, 12) == Rational(11, 12));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));
  CHECK(-Rational(1, 4) == Rational(-1, 4));
  CHECK(Rational(-1, 4) / Rational(3) + Rational(1) == Rational(11, 12));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) == Rational(1));
}

TEST_CASE("string round trip") {
  CHECK(Rational(11, 12).str() == "11/12");
  CHECK(Rational(-1, 4).str() == "-1/4");
  CHECK(Rational(3).str() == "3");
  CHECK(Rational::parse("11/12") == Rational(11, 12));
  CHECK(Rational::parse("-1/4") == Rational(-1, 4));
  CHECK(Rational::parse("3") == Rational(3));
}

TEST_CASE("field axioms on random small rationals") {
  qcycle::SplitMix64 rng(20260810);
  for (int t = 0; t < 500; ++t) {
    const auto draw = [&] {
      const long long num = static_cast<long long>(rng.next_below(2001)) - 1000;
      const long long den = static_cast<long long>(rng.next_below(999)) + 1;
      return Rational(num, den);
    };
    const Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (b != Rational(0)) CHECK(a / b * b == a);
  }
}

TEST_CASE("zero denominator and overflow guards") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  const Rational big(INT64_MAX, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("pow") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
  CHECK(Rational(5, 7).pow(0) == Rational(1));
}
