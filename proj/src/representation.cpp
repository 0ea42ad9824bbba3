#include "qcycle/representation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qcycle/cycles.hpp"

namespace qcycle {

namespace {

int half_k(int ell) { return (ell - 1) / 2; }

void check_ell(int ell) {
  if (ell < 7 || ell % 2 == 0) {
    throw invalid_parameter("ell must be odd and >= 7, got " +
                            std::to_string(ell));
  }
}

Vertex triple(int n, int p, int q, int r) {
  return Vertex::from_elements(n, {p, q, r});
}

std::string join_elems(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + std::to_string(v[i]);
  }
  return out;
}

// Path check: connected, |E| = |V| - 1, exactly two endpoints of degree 1,
// everything else degree 2.
bool is_path(const SimpleGraph& g, std::size_t expected_edges) {
  if (g.edge_count() != expected_edges) return false;
  if (g.vertex_count() != expected_edges + 1) return false;
  int deg1 = 0;
  for (int v : g.vertices()) {
    const int d = g.degree(v);
    if (d == 1) ++deg1;
    else if (d != 2) return false;
  }
  if (deg1 != 2) return false;
  // With |E| = |V|-1 and this degree pattern, connectivity (checked by the
  // caller) forces a path.
  return true;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::set<int> seen{g.vertices().front()};
  std::vector<int> stack{g.vertices().front()};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges()) {
      const int other = e[0] == u ? e[1] : (e[1] == u ? e[0] : -1);
      if (other >= 0 && seen.insert(other).second) stack.push_back(other);
    }
  }
  return seen.size() == g.vertex_count();
}

}  // namespace

GroundLabels GroundLabels::defaults(int ell) {
  check_ell(ell);
  const int k = half_k(ell);
  GroundLabels out;
  out.a = 1;
  out.b = 2;
  for (int i = 1; i <= k - 1; ++i) out.xs.push_back(2 + i);
  for (int j = 0; j <= k - 1; ++j) out.ys.push_back(k + 2 + j);
  return out;
}

Subgraph Representation::interleaved_cycle() const {
  std::vector<CubeEdge> edges;
  const std::size_t count = a_seq.size();
  for (std::size_t i = 0; i < count; ++i) {
    edges.emplace_back(a_seq[i], b_seq[i]);
    edges.emplace_back(b_seq[i], a_seq[(i + 1) % count]);
  }
  return Subgraph(n, edges);
}

Representation build_representation(int ell, int n,
                                    const std::optional<GroundLabels>& labels) {
  check_ell(ell);
  if (n < ell) {
    throw invalid_parameter("n=" + std::to_string(n) +
                            " too small for ell=" + std::to_string(ell));
  }
  if (n > kMaxDim) {
    throw invalid_parameter("n=" + std::to_string(n) + " above the cube cap " +
                            std::to_string(kMaxDim));
  }
  const int k = half_k(ell);
  const GroundLabels lab = labels.value_or(GroundLabels::defaults(ell));
  if (static_cast<int>(lab.xs.size()) != k - 1 ||
      static_cast<int>(lab.ys.size()) != k) {
    throw invalid_parameter("labels must carry k-1 x's and k y's");
  }
  {
    std::vector<int> all{lab.a, lab.b};
    all.insert(all.end(), lab.xs.begin(), lab.xs.end());
    all.insert(all.end(), lab.ys.begin(), lab.ys.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw invalid_parameter("labels must be pairwise distinct");
    }
    if (all.front() < 1 || all.back() > n) {
      throw invalid_parameter("labels must lie in 1..n");
    }
  }
  const auto x = [&](int i) { return lab.xs[i - 1]; };  // x_1..x_{k-1}
  const auto y = [&](int j) { return lab.ys[j]; };      // y_0..y_{k-1}

  Representation rep;
  rep.ell = ell;
  rep.n = n;
  rep.labels = lab;

  // a-block: ax_1y_1, then ax_iy_{i-1}, ax_iy_i for i = 2..k-1 (2k-3
  // triples); b-block: bx_{k-1}y_{k-1}, bx_{k-1}y_0, bx_1y_0, bx_1y_1.
  rep.a_seq.push_back(triple(n, lab.a, x(1), y(1)));
  for (int i = 2; i <= k - 1; ++i) {
    rep.a_seq.push_back(triple(n, lab.a, x(i), y(i - 1)));
    rep.a_seq.push_back(triple(n, lab.a, x(i), y(i)));
  }
  rep.a_seq.push_back(triple(n, lab.b, x(k - 1), y(k - 1)));
  rep.a_seq.push_back(triple(n, lab.b, x(k - 1), y(0)));
  rep.a_seq.push_back(triple(n, lab.b, x(1), y(0)));
  rep.a_seq.push_back(triple(n, lab.b, x(1), y(1)));

  // b_seq is derived, not transcribed: consecutive intersections, which the
  // cycle structure forces to have size 2.
  for (int i = 0; i < ell; ++i) {
    const uint32_t meet =
        rep.a_seq[i].bits & rep.a_seq[(i + 1) % ell].bits;
    if (std::popcount(meet) != 2) {
      throw verification_failure(
          "consecutive triples do not meet in exactly 2 elements at slot " +
          std::to_string(i));
    }
    rep.b_seq.push_back(Vertex{meet, n});
  }

  std::vector<std::array<int, 3>> hedges;
  for (const Vertex& v : rep.a_seq) {
    const auto e = v.elements();
    hedges.push_back({e[0], e[1], e[2]});
  }
  rep.hgraph = ThreeGraph(std::move(hedges));
  return rep;
}

namespace {

ClauseResult clause(int index, const std::string& name, bool pass,
                    const std::string& detail) {
  return ClauseResult{index, name, pass, detail};
}

}  // namespace

VerifyReport check_representation(const Representation& rep) {
  VerifyReport report;
  const int ell = rep.ell;
  const int k = half_k(ell);
  const auto& lab = rep.labels;

  // (i) the interleaved sequence is a 2l-cycle in Q_n, certified by the
  // cycle engine on the induced subgraph.
  {
    bool pass = false;
    std::string detail;
    try {
      if (static_cast<int>(rep.a_seq.size()) != ell ||
          static_cast<int>(rep.b_seq.size()) != ell) {
        throw verification_failure("sequence lengths differ from ell");
      }
      std::set<uint32_t> distinct;
      for (const Vertex& v : rep.a_seq) {
        if (v.layer() != 3) throw verification_failure("triple not in layer 3");
        distinct.insert(v.bits);
      }
      for (const Vertex& v : rep.b_seq) {
        if (v.layer() != 2) throw verification_failure("pair not in layer 2");
        distinct.insert(v.bits);
      }
      if (distinct.size() != static_cast<std::size_t>(2 * ell)) {
        throw verification_failure("vertices are not pairwise distinct");
      }
      for (int i = 0; i < ell; ++i) {
        if (rep.b_seq[i].bits !=
            (rep.a_seq[i].bits & rep.a_seq[(i + 1) % ell].bits)) {
          throw verification_failure("b_seq is not the consecutive meets");
        }
      }
      const Subgraph cyc = rep.interleaved_cycle();
      if (cyc.edge_count() != static_cast<std::size_t>(2 * ell)) {
        throw verification_failure("interleaving has repeated edges");
      }
      const auto cycles = enumerate_cycles(cyc, 2 * ell);
      if (cycles.size() != 1 ||
          cycles.front().length() != 2 * ell) {
        throw verification_failure("induced subgraph is not a single cycle");
      }
      pass = true;
      detail = "2l-cycle of " + std::to_string(2 * ell) +
               " edges across layers 2 and 3";
    } catch (const std::exception& err) {
      detail = err.what();
    }
    report.clauses.push_back(clause(1, "cycle-embedding", pass, detail));
  }

  // (ii) hgraph is 3-partite with parts {a,b}, xs, ys.
  {
    bool pass = true;
    std::string detail;
    const std::set<int> part_ab{lab.a, lab.b};
    const std::set<int> part_x(lab.xs.begin(), lab.xs.end());
    const std::set<int> part_y(lab.ys.begin(), lab.ys.end());
    for (const auto& e : rep.hgraph.edges()) {
      int in_ab = 0, in_x = 0, in_y = 0;
      for (int v : e) {
        in_ab += part_ab.count(v);
        in_x += part_x.count(v);
        in_y += part_y.count(v);
      }
      if (in_ab != 1 || in_x != 1 || in_y != 1) {
        pass = false;
        detail = "edge {" + join_elems({e[0], e[1], e[2]}) +
                 "} does not meet each part exactly once";
        break;
      }
    }
    if (pass) detail = "parts {a,b} / xs / ys each met exactly once";
    report.clauses.push_back(clause(2, "three-partite", pass, detail));
  }

  // (iii) L(a) is a path with 2k-3 edges and L(b) a path with 4 edges.
  SimpleGraph la, lb;
  {
    bool pass = false;
    std::string detail;
    try {
      la = link(rep.hgraph, lab.a);
      lb = link(rep.hgraph, lab.b);
      const std::size_t want_a = static_cast<std::size_t>(2 * k - 3);
      if (!is_connected(la) || !is_path(la, want_a)) {
        throw verification_failure("L(a) is not a path with " +
                                   std::to_string(want_a) + " edges");
      }
      if (!is_connected(lb) || !is_path(lb, 4)) {
        throw verification_failure("L(b) is not a path with 4 edges");
      }
      pass = true;
      detail = "L(a): path with " + std::to_string(la.edge_count()) +
               " edges; L(b): path with 4 edges";
    } catch (const std::exception& err) {
      detail = err.what();
    }
    report.clauses.push_back(clause(3, "link-paths", pass, detail));
  }

  // (iv) L(a) and L(b) share exactly x_1, y_1, x_{k-1}, y_{k-1} and exactly
  // the edges x_1y_1 and x_{k-1}y_{k-1}.
  {
    bool pass = false;
    std::string detail;
    std::vector<int> shared_vs;
    std::set_intersection(la.vertices().begin(), la.vertices().end(),
                          lb.vertices().begin(), lb.vertices().end(),
                          std::back_inserter(shared_vs));
    std::vector<std::array<int, 2>> shared_es;
    std::set_intersection(la.edges().begin(), la.edges().end(),
                          lb.edges().begin(), lb.edges().end(),
                          std::back_inserter(shared_es));
    std::vector<int> want_vs{lab.xs.front(), lab.ys[1], lab.xs.back(),
                             lab.ys[k - 1]};
    std::sort(want_vs.begin(), want_vs.end());
    want_vs.erase(std::unique(want_vs.begin(), want_vs.end()), want_vs.end());
    auto sorted_pair = [](int u, int v) {
      return std::array<int, 2>{std::min(u, v), std::max(u, v)};
    };
    std::vector<std::array<int, 2>> want_es{
        sorted_pair(lab.xs.front(), lab.ys[1]),
        sorted_pair(lab.xs.back(), lab.ys[k - 1])};
    std::sort(want_es.begin(), want_es.end());
    want_es.erase(std::unique(want_es.begin(), want_es.end()), want_es.end());
    if (shared_vs == want_vs && shared_es == want_es) {
      pass = true;
      detail = "shared vertices {" + join_elems(shared_vs) +
               "}, shared edges x1y1 and x(k-1)y(k-1)";
    } else {
      detail = "shared vertex/edge sets differ from x1,y1,x(k-1),y(k-1)";
    }
    report.clauses.push_back(clause(4, "link-overlap", pass, detail));
  }

  // (v) L(a) ∪ L(b) is a cycle of length l-3 with one pendant edge.
  SimpleGraph union_graph;
  {
    bool pass = false;
    std::string detail;
    try {
      std::vector<std::array<int, 2>> ue(la.edges());
      ue.insert(ue.end(), lb.edges().begin(), lb.edges().end());
      union_graph = SimpleGraph(std::move(ue));
      const std::size_t cycle_len = static_cast<std::size_t>(ell - 3);
      if (union_graph.edge_count() != cycle_len + 1) {
        throw verification_failure("union has " +
                                   std::to_string(union_graph.edge_count()) +
                                   " edges, want " +
                                   std::to_string(cycle_len + 1));
      }
      int pendant = -1, junction = -1;
      for (int v : union_graph.vertices()) {
        const int d = union_graph.degree(v);
        if (d == 1 && pendant < 0) pendant = v;
        else if (d == 3 && junction < 0) junction = v;
        else if (d != 2) throw verification_failure("degree pattern not cycle+pendant");
      }
      if (pendant < 0 || junction < 0 ||
          !union_graph.has_edge(pendant, junction)) {
        throw verification_failure("no pendant edge at a degree-3 vertex");
      }
      std::vector<std::array<int, 2>> rest;
      for (const auto& e : union_graph.edges()) {
        if (!(e[0] == std::min(pendant, junction) &&
              e[1] == std::max(pendant, junction))) {
          rest.push_back(e);
        }
      }
      const SimpleGraph core(std::move(rest));
      if (!is_connected(core) || core.vertex_count() != cycle_len ||
          core.edge_count() != cycle_len) {
        throw verification_failure("removing the pendant does not leave a " +
                                   std::to_string(cycle_len) + "-cycle");
      }
      for (int v : core.vertices()) {
        if (core.degree(v) != 2) {
          throw verification_failure("core is not 2-regular");
        }
      }
      pass = true;
      detail = "cycle of length " + std::to_string(cycle_len) +
               " plus pendant edge " + std::to_string(junction) + "-" +
               std::to_string(pendant);
    } catch (const std::exception& err) {
      detail = err.what();
    }
    report.clauses.push_back(clause(5, "link-union", pass, detail));
  }

  // (vi) hgraph is a subgraph of the two-lift of the union graph, under the
  // canonical identification of the apexes with a and b.
  {
    bool pass = false;
    std::string detail;
    try {
      const ThreeGraph lift = two_lift(union_graph);
      const auto [lift_a, lift_b] = two_lift_apexes(union_graph);
      for (const auto& e : rep.hgraph.edges()) {
        std::array<int, 3> img{};
        for (int t = 0; t < 3; ++t) {
          img[t] = e[t] == lab.a ? lift_a : (e[t] == lab.b ? lift_b : e[t]);
        }
        if (!lift.has_edge(img[0], img[1], img[2])) {
          throw verification_failure(
              "edge {" + join_elems({e[0], e[1], e[2]}) +
              "} is not in the two-lift of the union graph");
        }
      }
      pass = true;
      detail = "all " + std::to_string(rep.hgraph.edge_count()) +
               " edges inside the two-lift (" +
               std::to_string(lift.edge_count()) + " edges)";
    } catch (const std::exception& err) {
      detail = err.what();
    }
    report.clauses.push_back(clause(6, "two-lift-containment", pass, detail));
  }

  report.all_pass = true;
  for (const ClauseResult& c : report.clauses) {
    if (!c.pass) {
      report.all_pass = false;
      report.first_failure = c.name;
      break;
    }
  }
  return report;
}

VerifyReport verify_representation(const Representation& rep) {
  VerifyReport report = check_representation(rep);
  if (!report.all_pass) {
    throw verification_failure("representation verification failed at clause " +
                               report.first_failure);
  }
  return report;
}

KPartiteResult check_kpartite_representation(const Subgraph& h, int k) {
  if (k < 2) throw invalid_parameter("k must be >= 2");
  KPartiteResult result;
  result.k = k;

  std::vector<std::vector<int>> kedges;
  for (const Vertex& v : h.vertices()) {
    const int layer = v.layer();
    if (layer != k && layer != k - 1) {
      throw invalid_parameter("vertex " + v.str() + " lies in layer " +
                              std::to_string(layer) + ", not {" +
                              std::to_string(k - 1) + "," + std::to_string(k) +
                              "}");
    }
    if (layer == k) kedges.push_back(v.elements());
  }
  std::sort(kedges.begin(), kedges.end());
  result.edges = kedges;

  // Elements co-occurring in an edge must land in different parts; search
  // part assignments exhaustively with canonical symmetry breaking (element
  // i may open at most one new part).
  std::vector<int> ground;
  for (const auto& e : kedges) ground.insert(ground.end(), e.begin(), e.end());
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());

  std::map<int, std::set<int>> conflicts;
  for (int g : ground) conflicts[g];
  for (const auto& e : kedges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        conflicts[e[i]].insert(e[j]);
        conflicts[e[j]].insert(e[i]);
      }
    }
  }

  std::map<int, int> part_of;
  unsigned long long tried = 0;
  auto assign = [&](auto&& self, std::size_t idx, int parts_used) -> bool {
    if (idx == ground.size()) return true;
    const int elem = ground[idx];
    const int limit = std::min(k, parts_used + 1);
    for (int p = 0; p < limit; ++p) {
      ++tried;
      bool ok = true;
      for (int c : conflicts[elem]) {
        const auto it = part_of.find(c);
        if (it != part_of.end() && it->second == p) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      part_of[elem] = p;
      if (self(self, idx + 1, std::max(parts_used, p + 1))) return true;
      part_of.erase(elem);
    }
    return false;
  };

  if (!assign(assign, 0, 0)) {
    result.ok = false;
    result.assignments_tried = tried;
    result.failure = "no valid " + std::to_string(k) +
                     "-partition of the ground elements; exhausted " +
                     std::to_string(tried) + " assignments";
    return result;
  }

  result.ok = true;
  result.assignments_tried = tried;
  result.parts.assign(k, {});
  for (int elem = 1; elem <= h.dim(); ++elem) {
    const auto it = part_of.find(elem);
    // Elements of {1..n} not touched by any edge are unconstrained; they go
    // to the first part.
    result.parts[it == part_of.end() ? 0 : it->second].push_back(elem);
  }
  return result;
}

}  // namespace qcycle
