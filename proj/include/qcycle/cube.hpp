#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcycle/errors.hpp"

namespace qcycle {

// Largest supported ambient dimension. Vertices are n-bit masks, so the cap
// is about memory, not representation: the full Q_20 edge set is ~10.5M
// edges (~84 MB). Typical experiments stay at n <= 16.
inline constexpr int kMaxDim = 20;

// A hypercube vertex: a subset of {1..n} stored as a bitmask, bit i-1 <=> i.
struct Vertex {
  uint32_t bits = 0;
  int dim = 0;

  int layer() const { return std::popcount(bits); }
  bool contains(int element) const {
    return element >= 1 && element <= dim && (bits >> (element - 1)) & 1u;
  }
  std::vector<int> elements() const;
  std::string str() const;  // "{1,3}", "{}" for the empty set

  static Vertex from_elements(int dim, const std::vector<int>& elements);

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex&,
                                          const Vertex&) = default;
};

// Covering edge lo -> hi: lo ⊂ hi and |hi| = |lo| + 1. The constructor
// accepts endpoints in either order and normalizes; anything that is not a
// covering pair is rejected.
struct CubeEdge {
  Vertex lo, hi;

  CubeEdge(Vertex u, Vertex v);
  std::string str() const;  // "{1}-{1,3}"

  friend bool operator==(const CubeEdge&, const CubeEdge&) = default;
  friend std::strong_ordering operator<=>(const CubeEdge&,
                                          const CubeEdge&) = default;
};

// Storage form of an edge inside a Subgraph (dim lives on the Subgraph).
// For a covering pair lo ⊂ hi implies lo < hi numerically.
struct EdgeBits {
  uint32_t lo = 0, hi = 0;

  friend bool operator==(const EdgeBits&, const EdgeBits&) = default;
  friend std::strong_ordering operator<=>(const EdgeBits&,
                                          const EdgeBits&) = default;
};

// An edge set over Q_n vertices. Immutable after construction; edges are kept
// sorted and unique, and every edge is validated as a covering pair in Q_n.
class Subgraph {
 public:
  Subgraph(int dim, std::vector<EdgeBits> edges);
  Subgraph(int dim, const std::vector<CubeEdge>& edges);

  int dim() const { return dim_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<EdgeBits>& edges() const { return edges_; }
  CubeEdge edge_at(std::size_t i) const;
  bool has_edge(EdgeBits e) const;

  // Vertex set derived as the union of edge endpoints, ascending.
  std::vector<uint32_t> vertex_masks() const;
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Subgraph&, const Subgraph&) = default;

 private:
  int dim_ = 0;
  std::vector<EdgeBits> edges_;

  struct already_canonical {};
  Subgraph(int dim, std::vector<EdgeBits> edges, already_canonical);
  friend Subgraph build_qn(int n);
};

// The full hypercube Q_n; exactly n * 2^(n-1) edges, every vertex degree n.
Subgraph build_qn(int n);

// All C(n,k) subsets of size k, ascending by mask.
std::vector<Vertex> layer_vertices(int n, int k);

// True iff one subset covers the other. Mismatched dims are an error.
bool are_adjacent(const Vertex& u, const Vertex& v);

// Edge-list interchange format: header "dim=<n>", then one edge per line,
// each vertex a sorted brace set: "{1,3}-{1,3,4}".
void write_edge_list(const Subgraph& g, std::ostream& out);
std::string to_edge_list(const Subgraph& g);
Subgraph parse_edge_list(std::istream& in);
Subgraph parse_edge_list_text(const std::string& text);

}  // namespace qcycle
