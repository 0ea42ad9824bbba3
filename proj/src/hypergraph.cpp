#include "qcycle/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "qcycle/extremal.hpp"

namespace qcycle {

namespace {

template <typename EdgeArray>
std::vector<int> collect_vertices(const std::vector<EdgeArray>& edges,
                                  std::vector<int> extra) {
  for (const auto& e : edges) {
    for (int v : e) extra.push_back(v);
  }
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  return extra;
}

}  // namespace

SimpleGraph::SimpleGraph(std::vector<std::array<int, 2>> edges,
                         std::vector<int> extra_vertices) {
  for (auto& e : edges) {
    if (e[0] == e[1]) {
      throw invalid_parameter("loop edge at vertex " + std::to_string(e[0]));
    }
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  vertices_ = collect_vertices(edges, std::move(extra_vertices));
  edges_ = std::move(edges);
}

bool SimpleGraph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(),
                            std::array<int, 2>{u, v});
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e[0] == v) + (e[1] == v);
  return d;
}

bool SimpleGraph::is_bipartite(std::vector<int>* side) const {
  std::vector<int> color(vertices_.size(), -1);
  auto index = [&](int v) {
    return std::lower_bound(vertices_.begin(), vertices_.end(), v) -
           vertices_.begin();
  };
  std::vector<std::vector<int>> adj(vertices_.size());
  for (const auto& e : edges_) {
    const int i = static_cast<int>(index(e[0]));
    const int j = static_cast<int>(index(e[1]));
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (std::size_t s = 0; s < vertices_.size(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> bfs;
    bfs.push(static_cast<int>(s));
    while (!bfs.empty()) {
      const int u = bfs.front();
      bfs.pop();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          bfs.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(color);
  return true;
}

ThreeGraph::ThreeGraph(std::vector<std::array<int, 3>> edges,
                       std::vector<int> extra_vertices) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2]) {
      throw invalid_parameter("3-graph edge with repeated vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  vertices_ = collect_vertices(edges, std::move(extra_vertices));
  edges_ = std::move(edges);
}

bool ThreeGraph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool ThreeGraph::has_edge(int x, int y, int z) const {
  std::array<int, 3> e{x, y, z};
  std::sort(e.begin(), e.end());
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

SimpleGraph link(const ThreeGraph& g, int x) {
  if (!g.has_vertex(x)) {
    throw invalid_parameter("link of " + std::to_string(x) +
                            ": not a vertex of the 3-graph");
  }
  std::vector<std::array<int, 2>> pairs;
  for (const auto& e : g.edges()) {
    if (e[0] == x) pairs.push_back({e[1], e[2]});
    else if (e[1] == x) pairs.push_back({e[0], e[2]});
    else if (e[2] == x) pairs.push_back({e[0], e[1]});
  }
  return SimpleGraph(std::move(pairs));
}

std::pair<int, int> two_lift_apexes(const SimpleGraph& h) {
  if (h.edge_count() == 0) {
    throw invalid_parameter("two_lift: graph must be nonempty");
  }
  const int top = h.vertices().back();
  return {top + 1, top + 2};
}

ThreeGraph two_lift(const SimpleGraph& h) {
  if (!h.is_bipartite()) {
    throw invalid_parameter("two_lift: graph must be bipartite");
  }
  const auto [a, b] = two_lift_apexes(h);
  std::vector<std::array<int, 3>> edges;
  edges.reserve(2 * h.edge_count());
  for (const auto& e : h.edges()) {
    edges.push_back({e[0], e[1], a});
    edges.push_back({e[0], e[1], b});
  }
  return ThreeGraph(std::move(edges));
}

TwoLiftWitness find_largest_k2q(const ThreeGraph& g) {
  const auto& verts = g.vertices();
  if (verts.size() < 3) {
    throw invalid_parameter("find_largest_k2q: need at least 3 vertices");
  }
  // Per-vertex link edge lists, sorted; q(a,b) = |L(a) ∩ L(b)| (pairs
  // containing a or b cannot appear in both, so no filtering is needed).
  std::map<int, std::vector<std::array<int, 2>>> links;
  for (int v : verts) links[v] = {};
  for (const auto& e : g.edges()) {
    links[e[0]].push_back({e[1], e[2]});
    links[e[1]].push_back({e[0], e[2]});
    links[e[2]].push_back({e[0], e[1]});
  }
  for (auto& [v, list] : links) std::sort(list.begin(), list.end());

  TwoLiftWitness best;
  best.a = verts[0];
  best.b = verts[1];
  bool have_best = false;
  std::vector<std::array<int, 2>> common;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const auto& la = links[verts[i]];
      const auto& lb = links[verts[j]];
      common.clear();
      std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(),
                            std::back_inserter(common));
      if (!have_best || common.size() > best.pair_set.size()) {
        best.a = verts[i];
        best.b = verts[j];
        best.pair_set = common;
        have_best = true;
      }
    }
  }
  best.embedding[best.a] = best.a;
  best.embedding[best.b] = best.b;
  for (const auto& p : best.pair_set) {
    best.embedding[p[0]] = p[0];
    best.embedding[p[1]] = p[1];
  }
  return best;
}

StarCount star_count(const ThreeGraph& g) {
  StarCount out;
  // Lazily materialized centers: only pairs with positive degree.
  std::map<std::array<int, 2>, unsigned long long> pair_degree;
  for (const auto& e : g.edges()) {
    ++pair_degree[{e[1], e[2]}];
    ++pair_degree[{e[0], e[2]}];
    ++pair_degree[{e[0], e[1]}];
  }
  for (const auto& [pair, d] : pair_degree) {
    out.stars += d * (d - 1) / 2;
  }
  const long long n = static_cast<long long>(g.vertex_count());
  const long long pairs_full = n * (n - 1) / 2;
  if (pairs_full > 0) {
    // |U| * C(||G||/|U|, 2) with the generalized binomial for a rational
    // mean degree; ||G|| = 3 * edge count of the incidence graph.
    const Rational mean(3 * static_cast<long long>(g.edge_count()),
                        pairs_full);
    out.convexity_lower =
        Rational(pairs_full) * mean * (mean - Rational(1)) / Rational(2);
  }
  if (n >= 3) {
    out.q = find_largest_k2q(g).q();
  }
  out.upper_bound_holds =
      Rational(static_cast<long long>(out.stars)) <=
      Rational(static_cast<long long>(out.q)) * Rational(pairs_full);
  return out;
}

namespace {

// Backtracking subgraph-embedding search shared by the 2- and 3-uniform
// overloads. Pattern vertices are matched most-constrained-first; a pattern
// edge is checked as soon as its last endpoint is mapped.
template <int K>
class EmbeddingSearch {
 public:
  EmbeddingSearch(const std::vector<int>& host_vs,
                  const std::vector<std::array<int, K>>& host_es,
                  const std::vector<int>& pat_vs,
                  const std::vector<std::array<int, K>>& pat_es)
      : host_vs_(host_vs), host_es_(host_es), pat_vs_(pat_vs) {
    auto pat_index = [&](int v) {
      return static_cast<int>(
          std::lower_bound(pat_vs_.begin(), pat_vs_.end(), v) -
          pat_vs_.begin());
    };
    pat_deg_.assign(pat_vs_.size(), 0);
    host_deg_.assign(host_vs_.size(), 0);
    for (const auto& e : pat_es) {
      std::array<int, K> idx;
      for (int t = 0; t < K; ++t) {
        idx[t] = pat_index(e[t]);
        ++pat_deg_[idx[t]];
      }
      pat_edges_idx_.push_back(idx);
    }
    auto host_index = [&](int v) {
      return static_cast<int>(
          std::lower_bound(host_vs_.begin(), host_vs_.end(), v) -
          host_vs_.begin());
    };
    for (const auto& e : host_es) {
      for (int t = 0; t < K; ++t) ++host_deg_[host_index(e[t])];
    }
    build_order();
  }

  std::optional<std::map<int, int>> run() {
    map_.assign(pat_vs_.size(), -1);
    used_.assign(host_vs_.size(), 0);
    if (!place(0)) return std::nullopt;
    std::map<int, int> out;
    for (std::size_t i = 0; i < pat_vs_.size(); ++i) {
      out[pat_vs_[i]] = host_vs_[map_[i]];
    }
    return out;
  }

 private:
  void build_order() {
    const std::size_t pv = pat_vs_.size();
    std::vector<char> placed(pv, 0);
    for (std::size_t step = 0; step < pv; ++step) {
      int best = -1;
      int best_attached = -1;
      for (std::size_t v = 0; v < pv; ++v) {
        if (placed[v]) continue;
        int attached = 0;
        for (const auto& e : pat_edges_idx_) {
          bool has_v = false, has_placed = false;
          for (int t = 0; t < K; ++t) {
            if (e[t] == static_cast<int>(v)) has_v = true;
            if (placed[e[t]]) has_placed = true;
          }
          if (has_v && has_placed) ++attached;
        }
        if (best < 0 || attached > best_attached ||
            (attached == best_attached && pat_deg_[v] > pat_deg_[best])) {
          best = static_cast<int>(v);
          best_attached = attached;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
    // Edges checked at the step where their last vertex becomes mapped.
    std::vector<int> position(pv);
    for (std::size_t s = 0; s < pv; ++s) position[order_[s]] = static_cast<int>(s);
    check_at_.assign(pv, {});
    for (std::size_t e = 0; e < pat_edges_idx_.size(); ++e) {
      int last = 0;
      for (int t = 0; t < K; ++t) {
        last = std::max(last, position[pat_edges_idx_[e][t]]);
      }
      check_at_[last].push_back(static_cast<int>(e));
    }
  }

  bool place(std::size_t step) {
    if (step == order_.size()) return true;
    const int pv = order_[step];
    for (std::size_t h = 0; h < host_vs_.size(); ++h) {
      if (used_[h] || host_deg_[h] < pat_deg_[pv]) continue;
      map_[pv] = static_cast<int>(h);
      used_[h] = 1;
      bool ok = true;
      for (int e : check_at_[step]) {
        std::array<int, K> img;
        for (int t = 0; t < K; ++t) {
          img[t] = host_vs_[map_[pat_edges_idx_[e][t]]];
        }
        std::sort(img.begin(), img.end());
        if (!std::binary_search(host_es_.begin(), host_es_.end(), img)) {
          ok = false;
          break;
        }
      }
      if (ok && place(step + 1)) return true;
      used_[h] = 0;
      map_[pv] = -1;
    }
    return false;
  }

  const std::vector<int>& host_vs_;
  const std::vector<std::array<int, K>>& host_es_;
  const std::vector<int>& pat_vs_;
  std::vector<std::array<int, K>> pat_edges_idx_;
  std::vector<int> pat_deg_, host_deg_;
  std::vector<int> order_;
  std::vector<std::vector<int>> check_at_;
  std::vector<int> map_;
  std::vector<char> used_;
};

void check_pattern_cap(std::size_t pattern_vertices) {
  if (pattern_vertices > kEmbeddingPatternCap) {
    throw resource_limit("find_embedding: pattern has " +
                         std::to_string(pattern_vertices) +
                         " vertices, cap is " +
                         std::to_string(kEmbeddingPatternCap));
  }
}

}  // namespace

std::optional<std::map<int, int>> find_embedding(const SimpleGraph& host,
                                                 const SimpleGraph& pattern) {
  check_pattern_cap(pattern.vertex_count());
  if (pattern.vertex_count() > host.vertex_count() ||
      pattern.edge_count() > host.edge_count()) {
    return std::nullopt;
  }
  EmbeddingSearch<2> search(host.vertices(), host.edges(), pattern.vertices(),
                            pattern.edges());
  return search.run();
}

std::optional<std::map<int, int>> find_embedding(const ThreeGraph& host,
                                                 const ThreeGraph& pattern) {
  check_pattern_cap(pattern.vertex_count());
  if (pattern.vertex_count() > host.vertex_count() ||
      pattern.edge_count() > host.edge_count()) {
    return std::nullopt;
  }
  EmbeddingSearch<3> search(host.vertices(), host.edges(), pattern.vertices(),
                            pattern.edges());
  return search.run();
}

ExtractionResult extract_two_lift(const ThreeGraph& g,
                                  const SimpleGraph& target) {
  if (!target.is_bipartite() || target.edge_count() == 0) {
    throw invalid_parameter(
        "extract_two_lift: target must be bipartite and nonempty");
  }
  ExtractionResult result;
  result.witness = find_largest_k2q(g);
  result.q = result.witness.q();
  result.stars = star_count(g).stars;

  const SimpleGraph pair_graph(result.witness.pair_set);
  const auto embedding = result.q == 0
                             ? std::nullopt
                             : find_embedding(pair_graph, target);
  if (embedding) {
    result.success = true;
    result.target_map = *embedding;
    // Restrict the witness to the two-lift of the target.
    std::vector<std::array<int, 2>> pairs;
    for (const auto& e : target.edges()) {
      int u = result.target_map.at(e[0]);
      int v = result.target_map.at(e[1]);
      if (u > v) std::swap(u, v);
      pairs.push_back({u, v});
    }
    std::sort(pairs.begin(), pairs.end());
    result.witness.pair_set = std::move(pairs);
    result.witness.embedding = result.target_map;
    result.witness.embedding[result.witness.a] = result.witness.a;
    result.witness.embedding[result.witness.b] = result.witness.b;
    result.message = "two-lift of target found";
    return result;
  }

  result.success = false;
  const int n = static_cast<int>(g.vertex_count());
  if (n <= kExGraphCap) {
    result.oracle_threshold =
        static_cast<long long>(ex_graph(n, target).value);
  }
  std::ostringstream msg;
  msg << "target not found in the recovered pair graph: q=" << result.q
      << ", stars=" << result.stars;
  if (result.oracle_threshold) {
    msg << ", exact threshold ex(n,target)=" << *result.oracle_threshold
        << (static_cast<long long>(result.q) <= *result.oracle_threshold
                ? " (q does not exceed it)"
                : "");
  }
  result.message = msg.str();
  return result;
}

void write_three_graph(const ThreeGraph& g, std::ostream& out) {
  out << "n=" << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) {
    out << e[0] << " " << e[1] << " " << e[2] << "\n";
  }
}

std::string to_three_graph_text(const ThreeGraph& g) {
  std::ostringstream out;
  write_three_graph(g, out);
  return out.str();
}

ThreeGraph parse_three_graph(std::istream& in) {
  std::string line;
  long long n = -1;
  std::vector<std::array<int, 3>> edges;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("n=", 0) == 0) {
      n = std::stoll(line.substr(2));
      continue;
    }
    if (n < 0) throw invalid_parameter("3-graph file missing n= header");
    std::istringstream ss(line);
    std::array<int, 3> e{};
    if (!(ss >> e[0] >> e[1] >> e[2])) {
      throw invalid_parameter("malformed 3-graph edge line: " + line);
    }
    for (int v : e) {
      if (v < 1 || v > n) {
        throw invalid_parameter("3-graph edge vertex outside 1..n: " + line);
      }
    }
    edges.push_back(e);
  }
  if (n < 0) throw invalid_parameter("3-graph file missing n= header");
  std::vector<int> all(n);
  for (long long i = 0; i < n; ++i) all[i] = static_cast<int>(i + 1);
  return ThreeGraph(std::move(edges), std::move(all));
}

ThreeGraph parse_three_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_three_graph(in);
}

void write_simple_graph(const SimpleGraph& g, std::ostream& out) {
  out << "n=" << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) {
    out << e[0] << " " << e[1] << "\n";
  }
}

std::string to_simple_graph_text(const SimpleGraph& g) {
  std::ostringstream out;
  write_simple_graph(g, out);
  return out.str();
}

SimpleGraph parse_simple_graph(std::istream& in) {
  std::string line;
  long long n = -1;
  std::vector<std::array<int, 2>> edges;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("n=", 0) == 0) {
      n = std::stoll(line.substr(2));
      continue;
    }
    if (n < 0) throw invalid_parameter("graph file missing n= header");
    std::istringstream ss(line);
    std::array<int, 2> e{};
    if (!(ss >> e[0] >> e[1])) {
      throw invalid_parameter("malformed graph edge line: " + line);
    }
    for (int v : e) {
      if (v < 1 || v > n) {
        throw invalid_parameter("graph edge vertex outside 1..n: " + line);
      }
    }
    edges.push_back(e);
  }
  if (n < 0) throw invalid_parameter("graph file missing n= header");
  std::vector<int> all(n);
  for (long long i = 0; i < n; ++i) all[i] = static_cast<int>(i + 1);
  return SimpleGraph(std::move(edges), std::move(all));
}

SimpleGraph parse_simple_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_simple_graph(in);
}

}  // namespace qcycle
