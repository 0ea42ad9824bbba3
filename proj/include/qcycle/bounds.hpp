#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcycle/rational.hpp"

namespace qcycle {

// The derivation chain behind the upper bound ex(Q_n, C_2l) = O(n^e * 2^n)
// for odd l >= 7, all exact rationals:
//   cycle_exp:  ex(n, C_{l-3} + pendant) = O(n^cycle_exp), 1 + 2/(l-3)
//   lift_exp:   ex(n, two-lift of it)    = O(n^lift_exp),  (cycle_exp+4)/2
//   alpha_exp:  ex(n, lift) <= alpha*n^3 with alpha = n^alpha_exp
//   final_exp:  ex(Q_n, C_2l) = O(n^final_exp * 2^n), alpha_exp/3 + 1
struct ExponentChain {
  Rational cycle_exp;
  Rational lift_exp;
  Rational alpha_exp;
  Rational final_exp;
};

struct LiteratureRow {
  std::string key;          // stable identifier for machine output
  std::string description;  // which bound, normalized to the n^e * 2^n scale
  std::optional<Rational> exponent;
  std::string symbolic;     // non-empty when part of the exponent is symbolic
};

// 5/6 + 1/(3(l-3)) for odd l >= 7.
Rational upper_exponent(int ell);

// The full chain; final_exp always equals upper_exponent(ell).
ExponentChain upper_exponent_chain(int ell);

// 1/2 + 1/(4l-2) for l >= 2: the random-coloring lower bound exponent.
Rational lower_exponent(int ell);

// Every applicable literature exponent for C_2l, normalized to the
// n^e * 2^n scale (bounds stated against ||Q_n|| gain +1 in the power of n).
std::vector<LiteratureRow> literature_exponents(int ell);

}  // namespace qcycle
