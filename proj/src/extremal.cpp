#include "qcycle/extremal.hpp"

#include <algorithm>
#include <map>

#include "qcycle/cycles.hpp"

namespace qcycle {

namespace {

// Index-normalized pattern for the incremental containment check used by the
// complete-graph search. Distinct from find_embedding; the final witness is
// re-certified with the latter.
struct Pattern {
  int nv = 0;
  std::vector<std::array<int, 2>> edges;  // index pairs
  std::vector<int> degree;
};

Pattern normalize_pattern(const SimpleGraph& p) {
  Pattern out;
  out.nv = static_cast<int>(p.vertex_count());
  out.degree.assign(out.nv, 0);
  auto index = [&](int v) {
    return static_cast<int>(std::lower_bound(p.vertices().begin(),
                                             p.vertices().end(), v) -
                            p.vertices().begin());
  };
  for (const auto& e : p.edges()) {
    const int a = index(e[0]);
    const int b = index(e[1]);
    out.edges.push_back({a, b});
    ++out.degree[a];
    ++out.degree[b];
  }
  return out;
}

// Does the current graph (adjacency bitmasks) contain a copy of the pattern
// that uses the edge (eu, ev)? Tried for every pattern edge in both
// orientations, extending by backtracking.
class NewCopyCheck {
 public:
  NewCopyCheck(const Pattern& pat, const std::vector<uint64_t>& adj)
      : pat_(pat), adj_(adj), map_(pat.nv, -1), used_(adj.size(), 0) {}

  bool creates_copy(int eu, int ev) {
    for (std::size_t e = 0; e < pat_.edges.size(); ++e) {
      const auto [pa, pb] = std::pair(pat_.edges[e][0], pat_.edges[e][1]);
      if (try_rooted(pa, pb, eu, ev)) return true;
      if (try_rooted(pa, pb, ev, eu)) return true;
    }
    return false;
  }

 private:
  bool try_rooted(int pa, int pb, int hu, int hv) {
    std::fill(map_.begin(), map_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
    map_[pa] = hu;
    map_[pb] = hv;
    used_[hu] = used_[hv] = 1;
    if (!edges_ok(pa) || !edges_ok(pb)) return false;
    return extend(0);
  }

  bool edges_ok(int pv) const {
    for (const auto& e : pat_.edges) {
      const int other = e[0] == pv ? e[1] : (e[1] == pv ? e[0] : -1);
      if (other < 0 || map_[other] < 0) continue;
      if (!((adj_[map_[pv]] >> map_[other]) & 1ULL)) return false;
    }
    return true;
  }

  bool extend(int from) {
    int pv = -1;
    for (int v = from; v < pat_.nv; ++v) {
      if (map_[v] < 0) {
        pv = v;
        break;
      }
    }
    if (pv < 0) return true;
    for (int h = 0; h < static_cast<int>(adj_.size()); ++h) {
      if (used_[h]) continue;
      map_[pv] = h;
      used_[h] = 1;
      if (edges_ok(pv) && extend(pv + 1)) return true;
      used_[h] = 0;
      map_[pv] = -1;
    }
    return false;
  }

  const Pattern& pat_;
  const std::vector<uint64_t>& adj_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

ExGraphResult ex_graph(int n, const SimpleGraph& pattern, bool ignore_cap) {
  if (n < 1) throw invalid_parameter("ex_graph: n must be positive");
  if (!ignore_cap && n > kExGraphCap) {
    throw resource_limit("ex_graph: n=" + std::to_string(n) + " above cap " +
                         std::to_string(kExGraphCap));
  }
  if (pattern.edge_count() == 0) {
    throw invalid_parameter("ex_graph: pattern must have at least one edge");
  }

  std::vector<std::array<int, 2>> all_edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all_edges.push_back({i, j});
  }
  const int m = static_cast<int>(all_edges.size());
  const Pattern pat = normalize_pattern(pattern);

  std::vector<uint64_t> adj(n, 0);
  std::vector<char> chosen(m, 0), best_set(m, 0);
  long long best = -1;
  unsigned long long nodes = 0;
  NewCopyCheck check(pat, adj);

  // Include-first branch and bound; prune when even taking every remaining
  // edge cannot beat the incumbent. Exhaustion certifies value+1 infeasible.
  auto search = [&](auto&& self, int idx, long long count) -> void {
    ++nodes;
    if (count + (m - idx) <= best) return;
    if (idx == m) {
      best = count;
      best_set = chosen;
      return;
    }
    const auto [u, v] = std::pair(all_edges[idx][0], all_edges[idx][1]);
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
    if (pat.nv > n || !check.creates_copy(u, v)) {
      chosen[idx] = 1;
      self(self, idx + 1, count + 1);
      chosen[idx] = 0;
    }
    adj[u] &= ~(1ULL << v);
    adj[v] &= ~(1ULL << u);
    self(self, idx + 1, count);
  };
  search(search, 0, 0);

  ExGraphResult result;
  result.n = n;
  result.value = static_cast<unsigned long long>(best);
  result.nodes = nodes;
  result.optimal_certified = true;
  std::vector<std::array<int, 2>> witness_edges;
  for (int i = 0; i < m; ++i) {
    if (best_set[i]) {
      witness_edges.push_back({all_edges[i][0] + 1, all_edges[i][1] + 1});
    }
  }
  std::vector<int> all_vertices(n);
  for (int i = 0; i < n; ++i) all_vertices[i] = i + 1;
  result.witness = SimpleGraph(std::move(witness_edges), all_vertices);
  // Independent re-certification of the witness.
  if (pattern.vertex_count() <= kEmbeddingPatternCap &&
      find_embedding(result.witness, pattern)) {
    throw verification_failure("ex_graph: witness contains the pattern");
  }
  return result;
}

namespace {

// Is there a path of length `steps` from u to v in the current adjacency?
// Hamming distance to the target prunes, as in the cycle engine, but this is
// a separate implementation: the extremal search must not trust the engine
// it is later certified against.
bool path_exists(const std::map<uint32_t, std::vector<uint32_t>>& adj,
                 std::vector<uint32_t>& visited, uint32_t cur, uint32_t target,
                 int steps) {
  if (steps == 0) return cur == target;
  const auto it = adj.find(cur);
  if (it == adj.end()) return false;
  for (uint32_t nb : it->second) {
    const int dist = std::popcount(nb ^ target);
    if (dist > steps - 1 || ((steps - 1 - dist) & 1)) continue;
    if (nb == target && steps != 1) continue;
    if (std::find(visited.begin(), visited.end(), nb) != visited.end()) {
      continue;
    }
    visited.push_back(nb);
    const bool found = path_exists(adj, visited, nb, target, steps - 1);
    visited.pop_back();
    if (found) return true;
  }
  return false;
}

}  // namespace

ExCubeResult ex_cube(int n, int two_ell, bool ignore_cap) {
  if (two_ell < 4 || two_ell % 2 != 0) {
    throw invalid_parameter("ex_cube: cycle length must be even and >= 4");
  }
  if (!ignore_cap && n > kExCubeCap) {
    throw resource_limit("ex_cube: n=" + std::to_string(n) + " above cap " +
                         std::to_string(kExCubeCap));
  }
  const Subgraph qn = build_qn(n);
  const auto& all_edges = qn.edges();
  const int m = static_cast<int>(all_edges.size());

  std::map<uint32_t, std::vector<uint32_t>> adj;
  std::vector<char> chosen(m, 0), best_set(m, 0);
  long long best = -1;
  unsigned long long nodes = 0;
  std::vector<uint32_t> visited;

  auto creates_cycle = [&](uint32_t u, uint32_t v) {
    visited.assign(1, u);
    return path_exists(adj, visited, u, v, two_ell - 1);
  };

  auto search = [&](auto&& self, int idx, long long count) -> void {
    ++nodes;
    if (count + (m - idx) <= best) return;
    if (idx == m) {
      best = count;
      best_set = chosen;
      return;
    }
    const EdgeBits e = all_edges[idx];
    if (!creates_cycle(e.lo, e.hi)) {
      adj[e.lo].push_back(e.hi);
      adj[e.hi].push_back(e.lo);
      chosen[idx] = 1;
      self(self, idx + 1, count + 1);
      chosen[idx] = 0;
      adj[e.lo].pop_back();
      adj[e.hi].pop_back();
    }
    self(self, idx + 1, count);
  };
  search(search, 0, 0);

  ExCubeResult result{n, two_ell, static_cast<unsigned long long>(best),
                      Subgraph(n, std::vector<EdgeBits>{}), true, nodes};
  std::vector<EdgeBits> witness_edges;
  for (int i = 0; i < m; ++i) {
    if (best_set[i]) witness_edges.push_back(all_edges[i]);
  }
  result.witness = Subgraph(n, std::move(witness_edges));
  if (!is_cycle_free(result.witness, two_ell).cycle_free) {
    throw verification_failure("ex_cube: witness contains a cycle");
  }
  return result;
}

}  // namespace qcycle
