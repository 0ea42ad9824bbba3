#pragma once

#include <cstdint>

#include "qcycle/cube.hpp"
#include "qcycle/hypergraph.hpp"

namespace qcycle {

// Caps keep the unpruned-correct branch-and-bound in the minutes range.
// Callers may lift them (ignore_cap) at their own risk.
inline constexpr int kExGraphCap = 9;
inline constexpr int kExCubeCap = 4;

struct ExGraphResult {
  int n = 0;
  unsigned long long value = 0;  // exact ex(n, pattern)
  SimpleGraph witness;           // pattern-free subgraph with `value` edges
  bool optimal_certified = false;  // search ran to exhaustion
  unsigned long long nodes = 0;
};

struct ExCubeResult {
  int n = 0;
  int two_ell = 0;
  unsigned long long value = 0;  // exact ex(Q_n, C_{two_ell})
  Subgraph witness;
  bool optimal_certified = false;
  unsigned long long nodes = 0;
};

// Exact maximum edge count of a pattern-free subgraph of K_n, by
// branch-and-bound over edge subsets in canonical order. The witness is
// re-certified with find_embedding, independently of the search.
ExGraphResult ex_graph(int n, const SimpleGraph& pattern,
                       bool ignore_cap = false);

// Exact maximum edge count of a C_{two_ell}-free subgraph of Q_n. The
// witness is re-certified with the cycle engine, independently of the
// search.
ExCubeResult ex_cube(int n, int two_ell, bool ignore_cap = false);

}  // namespace qcycle
