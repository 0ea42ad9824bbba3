#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcycle/cube.hpp"
#include "qcycle/hypergraph.hpp"

namespace qcycle {

// Injective assignment of the 2k+1 = l abstract labels {a, b, x_1..x_{k-1},
// y_0..y_{k-1}} into the ground set {1..n}.
struct GroundLabels {
  int a = 0;
  int b = 0;
  std::vector<int> xs;  // x_1 .. x_{k-1}
  std::vector<int> ys;  // y_0 .. y_{k-1}

  // Fixed default: a=1, b=2, x_i = 2+i, y_j = k+2+j. Reproducible across
  // serializations.
  static GroundLabels defaults(int ell);

  friend bool operator==(const GroundLabels&, const GroundLabels&) = default;
};

// The layer-2/3 embedding of C_{2l} for odd l >= 7: l ordered triples in
// layer 3, l ordered pairs in layer 2 (each the intersection of consecutive
// triples), and the derived 3-graph whose edge set is the triples.
struct Representation {
  int ell = 0;
  int n = 0;
  GroundLabels labels;
  std::vector<Vertex> a_seq;  // layer-3 vertices, in cycle order
  std::vector<Vertex> b_seq;  // b_seq[i] = a_seq[i] ∩ a_seq[i+1 mod l]
  ThreeGraph hgraph;

  // The interleaved cycle A0, B0, A1, B1, ... as a subgraph of Q_n.
  Subgraph interleaved_cycle() const;
};

struct ClauseResult {
  int index = 0;  // 1-based
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<ClauseResult> clauses;
  bool all_pass = false;
  // Name of the first failed clause (empty when all pass).
  std::string first_failure;
};

// Result of the k-partite representation check: either the k-graph read off
// the layer-k vertices with a witnessing partition of {1..n}, or a failure
// describing what broke.
struct KPartiteResult {
  bool ok = false;
  int k = 0;
  std::vector<std::vector<int>> edges;  // k-element ascending label sets
  std::vector<std::vector<int>> parts;  // partition of {1..n}, k parts
  std::string failure;
  unsigned long long assignments_tried = 0;
};

// Builds the representation; labels default to 1..l in the documented fixed
// order. ell must be odd and >= 7, n >= ell (and within the cube cap).
Representation build_representation(
    int ell, int n, const std::optional<GroundLabels>& labels = std::nullopt);

// Evaluates all six structural clauses; never throws on clause failure.
VerifyReport check_representation(const Representation& rep);

// As check_representation, but throws verification_failure naming the first
// failed clause.
VerifyReport verify_representation(const Representation& rep);

// Reads the k-graph off V(h) ∩ layer-k and searches exhaustively for a
// k-partition of the ground set under which it is k-partite. Vertices of h
// outside layers {k-1, k} are an error.
KPartiteResult check_kpartite_representation(const Subgraph& h, int k);

}  // namespace qcycle
