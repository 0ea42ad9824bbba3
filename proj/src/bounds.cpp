#include "qcycle/bounds.hpp"

#include "qcycle/errors.hpp"

namespace qcycle {

namespace {

void check_odd_ell(int ell) {
  if (ell < 7 || ell % 2 == 0) {
    throw invalid_parameter("ell must be odd and >= 7, got " +
                            std::to_string(ell));
  }
}

}  // namespace

Rational upper_exponent(int ell) {
  check_odd_ell(ell);
  return Rational(5, 6) + Rational(1, 3LL * (ell - 3));
}

ExponentChain upper_exponent_chain(int ell) {
  check_odd_ell(ell);
  ExponentChain chain;
  chain.cycle_exp = Rational(1) + Rational(2, ell - 3);
  chain.lift_exp = (chain.cycle_exp + Rational(4)) / Rational(2);
  chain.alpha_exp = chain.lift_exp - Rational(3);
  chain.final_exp = chain.alpha_exp / Rational(3) + Rational(1);
  return chain;
}

Rational lower_exponent(int ell) {
  if (ell < 2) throw invalid_parameter("ell must be >= 2");
  return Rational(1, 2) + Rational(1, 4LL * ell - 2);
}

std::vector<LiteratureRow> literature_exponents(int ell) {
  if (ell < 2) throw invalid_parameter("ell must be >= 2");
  std::vector<LiteratureRow> rows;

  if (ell >= 7 && ell % 2 == 1) {
    rows.push_back({"odd_upper",
                    "upper bound for C_{2l}, odd l >= 7: n^(5/6 + 1/(3(l-3))) * 2^n",
                    upper_exponent(ell),
                    ""});
  }
  rows.push_back({"lll_lower",
                  "random-coloring lower bound, l >= 2: n^(1/2 + 1/(4l-2)) * 2^n",
                  lower_exponent(ell),
                  ""});
  if (ell % 2 == 0 && ell >= 4) {
    const int k = ell / 2;  // C_{2l} = C_{4k}
    rows.push_back({"c4k_upper",
                    "upper bound for C_{4k}, k >= 2: n^(-1/2 + 1/(2k)) * ||Q_n|| "
                    "= n^(1/2 + 1/(2k)) * 2^n",
                    Rational(1, 2) + Rational(1, 2LL * k),
                    ""});
  }
  if (ell % 2 == 1 && ell >= 7) {
    const int k = (ell - 1) / 2;  // C_{2l} = C_{4k+2}
    const Rational q = (k == 3 || k == 5 || k == 7)
                           ? Rational(1, 2LL * k + 1)
                           : Rational(1, 16) - Rational(1, 16LL * (k - 1));
    rows.push_back({"c4k2_upper",
                    "upper bound for C_{4k+2}, k >= 3: n^(-q_k) * ||Q_n|| "
                    "= n^(1 - q_k) * 2^n",
                    Rational(1) - q,
                    ""});
  }
  rows.push_back({"topological_upper",
                  "topological-hypergraph upper bound: n^(2/3 + delta) * 2^n",
                  Rational(2, 3),
                  "+ delta, delta = O(log l / l)"});
  return rows;
}

}  // namespace qcycle
