#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcycle/cube.hpp"

namespace qcycle {

// Work-unit budget shared by the enumeration and search operations: one unit
// per candidate vertex examined. Deterministic, unlike wall-clock limits.
inline constexpr uint64_t kDefaultBudget = 200'000'000;

// A 2l-cycle in canonical form: starts at the numerically smallest vertex,
// oriented so the second vertex is smaller than the last.
struct CycleWitness {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  // Union of the symmetric differences of consecutive vertices: the set of
  // coordinate positions the cycle moves in. Always at most l positions.
  Vertex support() const;
  std::vector<CubeEdge> edges() const;
};

// Total and per-edge cycle counts over the full Q_n.
struct CycleCensus {
  int n = 0;
  int two_ell = 0;
  uint64_t total = 0;
  std::vector<EdgeBits> edge_order;  // all edges of Q_n, canonical order
  std::vector<uint64_t> per_edge;    // aligned with edge_order

  bool uniform() const;
  // The common per-edge count x; throws verification_failure if the counts
  // are not all equal (they are, for the full Q_n, by edge-transitivity).
  uint64_t common_per_edge() const;
};

struct CycleFreeResult {
  bool cycle_free = false;
  std::optional<CycleWitness> witness;  // one witness when not cycle-free
};

struct CountingBoundRow {
  int n = 0;
  uint64_t total = 0;
  // total / (n^l * 2^n); denominator 0 when it does not fit in 64 bits.
  unsigned long long denominator = 0;
  double ratio = 0.0;
};

// Streams every cycle of length two_ell exactly once, in canonical order
// (anchor ascending, then lexicographic). The callback receives the vertex
// masks in canonical order and returns false to stop early.
void for_each_cycle(const Subgraph& g, int two_ell,
                    const std::function<bool(const std::vector<uint32_t>&)>& visit,
                    uint64_t budget = kDefaultBudget);

// Each cycle exactly once under the canonical form; stops after `limit`
// witnesses when limit > 0.
std::vector<CycleWitness> enumerate_cycles(const Subgraph& g, int two_ell,
                                           uint64_t limit = 0,
                                           uint64_t budget = kDefaultBudget);

// Full enumeration over Q_n with per-edge counts. The double-counting
// identity 2l * total == sum of per-edge counts holds exactly.
CycleCensus census(int n, int two_ell, uint64_t budget = kDefaultBudget);

CycleFreeResult is_cycle_free(const Subgraph& g, int two_ell,
                              uint64_t budget = kDefaultBudget);

// For each n in the range, the enumerated count and the ratio
// total / (n^l * 2^n); the ratio column stays bounded across the range.
std::vector<CountingBoundRow> check_counting_bound(
    const std::vector<int>& n_range, int two_ell,
    uint64_t budget = kDefaultBudget);

// Witness interchange block: the cube-core edge list plus a "cycle:" line
// listing the vertices in order.
std::string to_witness_text(const CycleWitness& w);

}  // namespace qcycle
