#pragma once

#include <cstdint>

#include "qcycle/cube.hpp"
#include "qcycle/cycles.hpp"
#include "qcycle/rational.hpp"

namespace qcycle {

// Parameters of the random edge-coloring: every edge of Q_n gets one of
// num_colors colors i.i.d. uniformly; p = c * n^(-a) with the exponent
// a = (l-1)/(2l-1) exact. num_colors = max(1, ceil(1/p)), so each color is
// chosen with probability at most p.
struct ColoringParams {
  int n = 0;
  int ell = 0;
  double c = 0.0;
  Rational a{0};
  double p = 0.0;
  int num_colors = 1;
  uint64_t seed = 0;
};

struct ConstructionResult {
  ColoringParams params;
  Subgraph kept_edges{1, std::vector<EdgeBits>{}};
  int color_selected = 0;
  uint64_t edges_before_deletion = 0;  // size of the largest color class
  uint64_t deletions = 0;
  uint64_t mono_cycles_found = 0;  // 2l-cycles in the class before deletion
  bool certified = false;          // independent cycle-engine scan
  double density_ratio = 0.0;      // |kept| / (n^(1/2 + 1/(4l-2)) * 2^n)
};

struct LLLReport {
  double p_bound = 0.0;      // p^(2l-1)
  double x = 0.0;            // per-edge cycle count (exact or estimated)
  bool x_exact = false;      // census-based when true, n^(l-1) estimate else
  double d_bound = 0.0;      // 2l * x
  double condition = 0.0;    // p_bound * (d_bound + 1) * e
  bool satisfied = false;    // condition < 1
};

struct MonoCycleStats {
  uint64_t trials = 0;
  double observed_mean = 0.0;
  double sample_stddev = 0.0;
  // N / num_colors^(2l-1): the exact expectation under the implementation.
  double expected_exact = 0.0;
  // N * p^(2l-1): the model upper bound (num_colors >= 1/p).
  double expected_bound = 0.0;
  uint64_t cycle_count = 0;  // N(Q_n, C_2l)
};

// Validates and derives the coloring parameters. c values that push p above
// 1 are rejected.
ColoringParams make_params(int n, int ell, double c, uint64_t seed);

// Colors Q_n with the seeded generator, keeps the largest color class, then
// repeatedly finds the canonically first remaining 2l-cycle and deletes its
// canonically smallest edge until none remain. The result is certified by an
// independent cycle-engine scan. Deterministic in (params, seed).
ConstructionResult run_construction(const ColoringParams& params,
                                    uint64_t budget = kDefaultBudget);

// The sufficient condition p^(2l-1) * (2l*x + 1) * e < 1 at these finite
// parameters; x comes from the census when the budget allows, otherwise from
// the n^(l-1) scaling estimate (flagged).
LLLReport lll_report(const ColoringParams& params,
                     uint64_t budget = kDefaultBudget);

// Empirical mean count of monochromatic 2l-cycles over seeded trials versus
// the exact expectation.
MonoCycleStats mono_cycle_stats(const ColoringParams& params, uint64_t trials,
                                uint64_t budget = kDefaultBudget);

}  // namespace qcycle
