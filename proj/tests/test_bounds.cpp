#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcycle/bounds.hpp"
#include "qcycle/errors.hpp"

using namespace qcycle;

TEST_CASE("upper exponent spot values") {
  CHECK(upper_exponent(7) == Rational(11, 12));
  CHECK(upper_exponent(9) == Rational(8, 9));
  CHECK(upper_exponent(13) == Rational(13, 15));
  CHECK_THROWS_AS(upper_exponent(6), invalid_parameter);
  CHECK_THROWS_AS(upper_exponent(5), invalid_parameter);
}

TEST_CASE("exponent chain at ell = 7") {
  const ExponentChain chain = upper_exponent_chain(7);
  CHECK(chain.cycle_exp == Rational(3, 2));
  CHECK(chain.lift_exp == Rational(11, 4));
  CHECK(chain.alpha_exp == Rational(-1, 4));
  CHECK(chain.final_exp == Rational(11, 12));
}

TEST_CASE("alpha exponent equals -1/2 + 1/(l-3)") {
  for (int ell = 7; ell <= 99; ell += 2) {
    CHECK(upper_exponent_chain(ell).alpha_exp ==
          Rational(-1, 2) + Rational(1, ell - 3));
  }
}

TEST_CASE("chain final equals the closed form for all odd ell in 7..99") {
  for (int ell = 7; ell <= 99; ell += 2) {
    CHECK(upper_exponent_chain(ell).final_exp == upper_exponent(ell));
    CHECK(upper_exponent(ell) ==
          Rational(5, 6) + Rational(1, 3LL * (ell - 3)));
  }
}

TEST_CASE("upper exponent strictly decreases toward 5/6") {
  Rational previous = upper_exponent(7);
  for (int ell = 9; ell <= 99; ell += 2) {
    const Rational cur = upper_exponent(ell);
    CHECK(cur < previous);
    CHECK(cur > Rational(5, 6));
    CHECK(cur - Rational(5, 6) == Rational(1, 3LL * (ell - 3)));
    previous = cur;
  }
}

TEST_CASE("lower bound exponent") {
  CHECK(lower_exponent(2) == Rational(2, 3));
  CHECK(lower_exponent(7) == Rational(1, 2) + Rational(1, 26));
  CHECK_THROWS_AS(lower_exponent(1), invalid_parameter);
}

TEST_CASE("lower bound stays below the upper bound") {
  for (int ell = 7; ell <= 99; ell += 2) {
    CHECK(lower_exponent(ell) < upper_exponent(ell));
  }
}

TEST_CASE("literature table rows") {
  const auto at7 = literature_exponents(7);
  bool saw_odd = false, saw_lower = false, saw_c4k2 = false, saw_topo = false;
  for (const auto& row : at7) {
    if (row.key == "odd_upper") {
      saw_odd = true;
      CHECK(row.exponent == Rational(11, 12));
    }
    if (row.key == "lll_lower") {
      saw_lower = true;
      CHECK(row.exponent == Rational(1, 2) + Rational(1, 26));
    }
    if (row.key == "c4k2_upper") {
      saw_c4k2 = true;
      // k = 3: q = 1/7, normalized 6/7.
      CHECK(row.exponent == Rational(6, 7));
    }
    if (row.key == "topological_upper") {
      saw_topo = true;
      CHECK(row.exponent == Rational(2, 3));
      CHECK(!row.symbolic.empty());  // delta stays symbolic
    }
  }
  CHECK(saw_odd);
  CHECK(saw_lower);
  CHECK(saw_c4k2);
  CHECK(saw_topo);

  // Even ell = 2k: the C_{4k} row, k = 2 -> 3/4.
  const auto at4 = literature_exponents(4);
  bool saw_c4k = false;
  for (const auto& row : at4) {
    if (row.key == "c4k_upper") {
      saw_c4k = true;
      CHECK(row.exponent == Rational(3, 4));
    }
    if (row.key == "odd_upper") CHECK(false);
  }
  CHECK(saw_c4k);

  // ell = 2: lower bound only applies, 2/3.
  const auto at2 = literature_exponents(2);
  for (const auto& row : at2) {
    if (row.key == "lll_lower") CHECK(row.exponent == Rational(2, 3));
  }

  // Other k (k = 4, ell = 9): q = 1/16 - 1/48 = 1/24, normalized 23/24.
  const auto at9 = literature_exponents(9);
  for (const auto& row : at9) {
    if (row.key == "c4k2_upper") CHECK(row.exponent == Rational(23, 24));
  }
}
