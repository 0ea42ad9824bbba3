#include "qcycle/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcycle {

namespace {

struct Adjacency {
  std::vector<uint32_t> verts;         // sorted masks
  std::vector<std::vector<int>> nbrs;  // neighbor indices, ascending

  int index_of(uint32_t mask) const {
    const auto it = std::lower_bound(verts.begin(), verts.end(), mask);
    return static_cast<int>(it - verts.begin());
  }
};

Adjacency build_adjacency(const Subgraph& g) {
  Adjacency adj;
  adj.verts = g.vertex_masks();
  adj.nbrs.resize(adj.verts.size());
  for (const EdgeBits& e : g.edges()) {
    const int i = adj.index_of(e.lo);
    const int j = adj.index_of(e.hi);
    adj.nbrs[i].push_back(j);
    adj.nbrs[j].push_back(i);
  }
  for (auto& list : adj.nbrs) std::sort(list.begin(), list.end());
  return adj;
}

void check_length(int two_ell) {
  if (two_ell < 4 || two_ell % 2 != 0) {
    throw invalid_parameter("cycle length must be even and >= 4, got " +
                            std::to_string(two_ell));
  }
}

// DFS for cycles anchored at their smallest vertex. Each cycle is reported
// once: the anchor is the minimum (kills rotations) and the second vertex is
// required to be smaller than the last (kills the reflection). Pruning uses
// the Hamming distance back to the anchor, which lower-bounds the remaining
// walk length in any subgraph of Q_n, plus bipartite parity.
class CycleSearch {
 public:
  CycleSearch(const Adjacency& adj, int length, uint64_t budget)
      : adj_(adj),
        length_(length),
        budget_(budget),
        on_path_(adj.verts.size(), 0) {
    path_.reserve(length);
    masks_.resize(length);
  }

  // Visits cycles anchored at `anchor` in lexicographic order; the callback
  // returns false to stop. Returns false if the visitor stopped the search.
  bool run_anchor(int anchor,
                  const std::function<bool(const std::vector<uint32_t>&)>& visit) {
    if (adj_.nbrs[anchor].size() < 2) return true;
    anchor_ = anchor;
    anchor_mask_ = adj_.verts[anchor];
    path_.assign(1, anchor);
    on_path_[anchor] = 1;
    const bool keep_going = extend(1, visit);
    on_path_[anchor] = 0;
    return keep_going;
  }

 private:
  bool extend(int pos,
              const std::function<bool(const std::vector<uint32_t>&)>& visit) {
    const int rem = length_ - pos;  // steps left after placing at `pos`
    for (int nb : adj_.nbrs[path_.back()]) {
      if (++work_ > budget_) {
        throw resource_limit("cycle enumeration exceeded work budget of " +
                             std::to_string(budget_) + " units");
      }
      if (nb <= anchor_ || on_path_[nb]) continue;
      const uint32_t mask = adj_.verts[nb];
      const int dist = std::popcount(mask ^ anchor_mask_);
      if (dist > rem || ((rem - dist) & 1)) continue;
      if (pos == length_ - 1) {
        // dist == 1 here; the closing edge must exist in the subgraph.
        if (mask <= adj_.verts[path_[1]]) continue;
        const auto& back_nbrs = adj_.nbrs[nb];
        if (!std::binary_search(back_nbrs.begin(), back_nbrs.end(), anchor_)) {
          continue;
        }
        for (int i = 0; i < pos; ++i) masks_[i] = adj_.verts[path_[i]];
        masks_[pos] = mask;
        if (!visit(masks_)) return false;
      } else {
        path_.push_back(nb);
        on_path_[nb] = 1;
        const bool keep_going = extend(pos + 1, visit);
        on_path_[nb] = 0;
        path_.pop_back();
        if (!keep_going) return false;
      }
    }
    return true;
  }

  const Adjacency& adj_;
  const int length_;
  const uint64_t budget_;
  int anchor_ = 0;
  uint32_t anchor_mask_ = 0;
  uint64_t work_ = 0;
  std::vector<int> path_;
  std::vector<char> on_path_;
  std::vector<uint32_t> masks_;
};

}  // namespace

Vertex CycleWitness::support() const {
  uint32_t bits = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    bits |= vertices[i].bits ^ vertices[(i + 1) % vertices.size()].bits;
  }
  return Vertex{bits, vertices.empty() ? 0 : vertices.front().dim};
}

std::vector<CubeEdge> CycleWitness::edges() const {
  std::vector<CubeEdge> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return out;
}

bool CycleCensus::uniform() const {
  for (uint64_t c : per_edge) {
    if (c != per_edge.front()) return false;
  }
  return !per_edge.empty();
}

uint64_t CycleCensus::common_per_edge() const {
  if (!uniform()) {
    throw verification_failure("per-edge cycle counts are not uniform");
  }
  return per_edge.front();
}

void for_each_cycle(const Subgraph& g, int two_ell,
                    const std::function<bool(const std::vector<uint32_t>&)>& visit,
                    uint64_t budget) {
  check_length(two_ell);
  const Adjacency adj = build_adjacency(g);
  CycleSearch search(adj, two_ell, budget);
  for (int anchor = 0; anchor < static_cast<int>(adj.verts.size()); ++anchor) {
    if (!search.run_anchor(anchor, visit)) return;
  }
}

std::vector<CycleWitness> enumerate_cycles(const Subgraph& g, int two_ell,
                                           uint64_t limit, uint64_t budget) {
  std::vector<CycleWitness> out;
  for_each_cycle(
      g, two_ell,
      [&](const std::vector<uint32_t>& masks) {
        CycleWitness w;
        w.vertices.reserve(masks.size());
        for (uint32_t m : masks) w.vertices.push_back(Vertex{m, g.dim()});
        out.push_back(std::move(w));
        return limit == 0 || out.size() < limit;
      },
      budget);
  return out;
}

CycleCensus census(int n, int two_ell, uint64_t budget) {
  check_length(two_ell);
  const Subgraph qn = build_qn(n);
  CycleCensus result;
  result.n = n;
  result.two_ell = two_ell;
  result.edge_order = qn.edges();
  result.per_edge.assign(result.edge_order.size(), 0);
  try {
    for_each_cycle(
        qn, two_ell,
        [&](const std::vector<uint32_t>& masks) {
          ++result.total;
          for (std::size_t i = 0; i < masks.size(); ++i) {
            const uint32_t a = masks[i];
            const uint32_t b = masks[(i + 1) % masks.size()];
            const EdgeBits e{std::min(a, b), std::max(a, b)};
            const auto it = std::lower_bound(result.edge_order.begin(),
                                             result.edge_order.end(), e);
            ++result.per_edge[it - result.edge_order.begin()];
          }
          return true;
        },
        budget);
  } catch (const resource_limit&) {
    throw resource_limit("census(n=" + std::to_string(n) +
                         ", two_ell=" + std::to_string(two_ell) +
                         ") exceeded the work budget of " +
                         std::to_string(budget) + " units");
  }
  return result;
}

CycleFreeResult is_cycle_free(const Subgraph& g, int two_ell,
                              uint64_t budget) {
  CycleFreeResult result;
  result.cycle_free = true;
  for_each_cycle(
      g, two_ell,
      [&](const std::vector<uint32_t>& masks) {
        CycleWitness w;
        for (uint32_t m : masks) w.vertices.push_back(Vertex{m, g.dim()});
        result.witness = std::move(w);
        result.cycle_free = false;
        return false;
      },
      budget);
  return result;
}

std::vector<CountingBoundRow> check_counting_bound(
    const std::vector<int>& n_range, int two_ell, uint64_t budget) {
  check_length(two_ell);
  const int ell = two_ell / 2;
  std::vector<CountingBoundRow> table;
  for (int n : n_range) {
    const CycleCensus c = census(n, two_ell, budget);
    CountingBoundRow row;
    row.n = n;
    row.total = c.total;
    unsigned __int128 denom = 1;
    for (int i = 0; i < ell; ++i) denom *= static_cast<unsigned>(n);
    denom <<= n;
    row.denominator = denom <= ~0ULL ? static_cast<unsigned long long>(denom) : 0;
    long double d = 1.0L;
    for (int i = 0; i < ell; ++i) d *= n;
    d *= std::pow(2.0L, n);
    row.ratio = static_cast<double>(c.total / d);
    table.push_back(row);
  }
  return table;
}

std::string to_witness_text(const CycleWitness& w) {
  std::ostringstream out;
  if (w.vertices.empty()) return "";
  const Subgraph edges(w.vertices.front().dim, w.edges());
  write_edge_list(edges, out);
  out << "cycle:";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    out << (i ? "," : " ") << w.vertices[i].str();
  }
  out << "\n";
  return out.str();
}

}  // namespace qcycle
