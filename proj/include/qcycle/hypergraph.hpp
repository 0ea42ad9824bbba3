#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcycle/errors.hpp"
#include "qcycle/rational.hpp"

namespace qcycle {

// Patterns above this vertex count are refused by find_embedding; the
// backtracking search is exact but meant for desk-scale instances.
inline constexpr int kEmbeddingPatternCap = 12;

// Simple graph on integer labels. Edges are unordered pairs, kept sorted and
// unique; loops are rejected. The vertex set is the union of the endpoints
// plus any explicitly supplied extra vertices.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::array<int, 2>> edges,
                       std::vector<int> extra_vertices = {});

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  // Two-colorable check; when `side` is given it receives a 0/1 color per
  // vertices() position.
  bool is_bipartite(std::vector<int>* side = nullptr) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<int> vertices_;
  std::vector<std::array<int, 2>> edges_;
};

// 3-uniform hypergraph on integer labels; edges are 3-element subsets.
class ThreeGraph {
 public:
  ThreeGraph() = default;
  explicit ThreeGraph(std::vector<std::array<int, 3>> edges,
                      std::vector<int> extra_vertices = {});

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(int v) const;
  bool has_edge(int x, int y, int z) const;

  friend bool operator==(const ThreeGraph&, const ThreeGraph&) = default;

 private:
  std::vector<int> vertices_;
  std::vector<std::array<int, 3>> edges_;
};

// K_{2,q} found inside a host 3-graph: apexes a,b plus the family Q of pairs
// zz' with both azz' and bzz' host edges. `embedding` maps the vertices of
// the abstract lifted structure into the host (identity for witnesses found
// in place).
struct TwoLiftWitness {
  int a = 0;
  int b = 0;
  std::vector<std::array<int, 2>> pair_set;
  std::map<int, int> embedding;

  std::size_t q() const { return pair_set.size(); }
};

struct StarCount {
  unsigned long long stars = 0;     // X: 2-edge stars centered on pairs
  Rational convexity_lower{0};      // C(n,2) * C(3m / C(n,2), 2)
  std::size_t q = 0;                // from find_largest_k2q
  bool upper_bound_holds = false;   // X <= q * C(n,2), exact
};

struct ExtractionResult {
  bool success = false;
  TwoLiftWitness witness;           // two-lift of the target on success,
                                    // otherwise the best K_{2,q} found
  std::map<int, int> target_map;    // target vertex -> host vertex
  unsigned long long stars = 0;     // X
  std::size_t q = 0;
  // ex(|V(host)|, target) when the host is small enough for the exact
  // oracle; the pipeline guarantees success whenever q exceeds it.
  std::optional<long long> oracle_threshold;
  std::string message;
};

// All pairs yz such that xyz is an edge; never has isolated vertices.
SimpleGraph link(const ThreeGraph& g, int x);

// The 3-graph {a,b} ∪ V(h) with edges {a∪e, b∪e : e in h}; h must be
// bipartite and nonempty. The apexes are the two labels after max(V(h)).
ThreeGraph two_lift(const SimpleGraph& h);
std::pair<int, int> two_lift_apexes(const SimpleGraph& h);

// Exhaustive over all vertex pairs; maximizes q, ties broken by
// lexicographic (a, b). q = 0 yields an empty witness, not an error.
TwoLiftWitness find_largest_k2q(const ThreeGraph& g);

StarCount star_count(const ThreeGraph& g);

// Injective map carrying pattern edges into host edges, or nullopt.
// Exhaustive backtracking; patterns above kEmbeddingPatternCap are refused.
std::optional<std::map<int, int>> find_embedding(const SimpleGraph& host,
                                                 const SimpleGraph& pattern);
std::optional<std::map<int, int>> find_embedding(const ThreeGraph& host,
                                                 const ThreeGraph& pattern);

// Dense-extraction pipeline: find the largest K_{2,q}, then search the
// target inside the recovered pair graph. On failure the report carries q,
// the star count, and the exact-oracle threshold when computable.
ExtractionResult extract_two_lift(const ThreeGraph& g,
                                  const SimpleGraph& target);

// 3-graph interchange format: header "n=<count>" (vertices are 1..n), then
// one edge per line, three ascending labels "i j k".
void write_three_graph(const ThreeGraph& g, std::ostream& out);
std::string to_three_graph_text(const ThreeGraph& g);
ThreeGraph parse_three_graph(std::istream& in);
ThreeGraph parse_three_graph_text(const std::string& text);

// Same shape for simple graphs: "n=<count>", then "i j" per edge.
void write_simple_graph(const SimpleGraph& g, std::ostream& out);
std::string to_simple_graph_text(const SimpleGraph& g);
SimpleGraph parse_simple_graph(std::istream& in);
SimpleGraph parse_simple_graph_text(const std::string& text);

}  // namespace qcycle
