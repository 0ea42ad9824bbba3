#include "qcycle/random_construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcycle/rng.hpp"

namespace qcycle {

namespace {

// Mutable adjacency for the deletion loop. Neighbor lists stay ascending so
// the scan order is canonical.
struct DeletionGraph {
  std::vector<uint32_t> verts;
  std::vector<std::vector<int>> nbrs;
  uint64_t work = 0;
  uint64_t budget = 0;

  explicit DeletionGraph(const std::vector<EdgeBits>& edges, uint64_t budget_)
      : budget(budget_) {
    for (const EdgeBits& e : edges) {
      verts.push_back(e.lo);
      verts.push_back(e.hi);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    nbrs.resize(verts.size());
    for (const EdgeBits& e : edges) {
      const int i = index_of(e.lo);
      const int j = index_of(e.hi);
      nbrs[i].push_back(j);
      nbrs[j].push_back(i);
    }
    for (auto& list : nbrs) std::sort(list.begin(), list.end());
  }

  int index_of(uint32_t mask) const {
    return static_cast<int>(
        std::lower_bound(verts.begin(), verts.end(), mask) - verts.begin());
  }

  void remove_edge(int i, int j) {
    auto& a = nbrs[i];
    a.erase(std::lower_bound(a.begin(), a.end(), j));
    auto& b = nbrs[j];
    b.erase(std::lower_bound(b.begin(), b.end(), i));
  }

  // Lexicographically first cycle of the given length anchored at `anchor`
  // (anchor minimal on the cycle, second vertex below the last). Appends the
  // vertex indices to `out` and returns true when found.
  bool first_cycle_at(int anchor, int length, std::vector<int>& out,
                      std::vector<char>& on_path) {
    if (nbrs[anchor].size() < 2) return false;
    out.assign(1, anchor);
    on_path[anchor] = 1;
    const bool found = extend(anchor, 1, length, out, on_path);
    on_path[anchor] = 0;
    if (!found) out.clear();
    return found;
  }

  bool count_all(int anchor, int length, uint64_t& total,
                 std::vector<int>& path, std::vector<char>& on_path) {
    if (nbrs[anchor].size() < 2) return true;
    path.assign(1, anchor);
    on_path[anchor] = 1;
    count_extend(anchor, 1, length, total, path, on_path);
    on_path[anchor] = 0;
    return true;
  }

 private:
  void bump() {
    if (++work > budget) {
      throw resource_limit("construction scan exceeded work budget of " +
                           std::to_string(budget) + " units");
    }
  }

  bool extend(int anchor, int pos, int length, std::vector<int>& path,
              std::vector<char>& on_path) {
    const int rem = length - pos;
    const uint32_t anchor_mask = verts[anchor];
    for (int nb : nbrs[path.back()]) {
      bump();
      if (nb <= anchor || on_path[nb]) continue;
      const int dist = std::popcount(verts[nb] ^ anchor_mask);
      if (dist > rem || ((rem - dist) & 1)) continue;
      if (pos == length - 1) {
        if (verts[nb] <= verts[path[1]]) continue;
        const auto& back = nbrs[nb];
        if (!std::binary_search(back.begin(), back.end(), anchor)) continue;
        path.push_back(nb);
        return true;
      }
      path.push_back(nb);
      on_path[nb] = 1;
      if (extend(anchor, pos + 1, length, path, on_path)) {
        on_path[nb] = 0;
        return true;
      }
      on_path[nb] = 0;
      path.pop_back();
    }
    return false;
  }

  void count_extend(int anchor, int pos, int length, uint64_t& total,
                    std::vector<int>& path, std::vector<char>& on_path) {
    const int rem = length - pos;
    const uint32_t anchor_mask = verts[anchor];
    for (int nb : nbrs[path.back()]) {
      bump();
      if (nb <= anchor || on_path[nb]) continue;
      const int dist = std::popcount(verts[nb] ^ anchor_mask);
      if (dist > rem || ((rem - dist) & 1)) continue;
      if (pos == length - 1) {
        if (verts[nb] <= verts[path[1]]) continue;
        const auto& back = nbrs[nb];
        if (!std::binary_search(back.begin(), back.end(), anchor)) continue;
        ++total;
      } else {
        path.push_back(nb);
        on_path[nb] = 1;
        count_extend(anchor, pos + 1, length, total, path, on_path);
        on_path[nb] = 0;
        path.pop_back();
      }
    }
  }
};

double lower_bound_exponent(int ell) {
  return (Rational(1, 2) + Rational(1, 4 * ell - 2)).to_double();
}

}  // namespace

ColoringParams make_params(int n, int ell, double c, uint64_t seed) {
  if (n < 2 || n > kMaxDim) {
    throw invalid_parameter("make_params: n must be in 2.." +
                            std::to_string(kMaxDim));
  }
  if (ell < 2) throw invalid_parameter("make_params: ell must be >= 2");
  if (!(c > 0.0)) throw invalid_parameter("make_params: c must be positive");
  ColoringParams params;
  params.n = n;
  params.ell = ell;
  params.c = c;
  params.seed = seed;
  params.a = Rational(ell - 1, 2 * ell - 1);
  params.p = c * std::pow(static_cast<double>(n), -params.a.to_double());
  if (params.p > 1.0) {
    throw invalid_parameter("make_params: p = c*n^(-a) = " +
                            std::to_string(params.p) +
                            " exceeds 1; c too large for this n");
  }
  const double inv = 1.0 / params.p;
  // ceil with a guard against floating fuzz when 1/p is integral.
  double rounded = std::ceil(inv);
  if (rounded - inv > 1.0 - 1e-9 && std::abs(inv - std::round(inv)) < 1e-9) {
    rounded = std::round(inv);
  }
  params.num_colors = std::max(1, static_cast<int>(rounded));
  return params;
}

ConstructionResult run_construction(const ColoringParams& params,
                                    uint64_t budget) {
  const Subgraph qn = build_qn(params.n);
  const auto& all_edges = qn.edges();

  // Colors drawn in canonical edge order from the pinned generator.
  SplitMix64 gen(params.seed);
  std::vector<uint32_t> color(all_edges.size());
  std::vector<uint64_t> class_size(params.num_colors, 0);
  for (std::size_t i = 0; i < all_edges.size(); ++i) {
    color[i] = static_cast<uint32_t>(
        gen.next_below(static_cast<uint64_t>(params.num_colors)));
    ++class_size[color[i]];
  }
  int selected = 0;
  for (int c = 1; c < params.num_colors; ++c) {
    if (class_size[c] > class_size[selected]) selected = c;
  }

  std::vector<EdgeBits> class_edges;
  class_edges.reserve(class_size[selected]);
  for (std::size_t i = 0; i < all_edges.size(); ++i) {
    if (color[i] == static_cast<uint32_t>(selected)) {
      class_edges.push_back(all_edges[i]);
    }
  }

  ConstructionResult result;
  result.params = params;
  result.color_selected = selected;
  result.edges_before_deletion = class_edges.size();

  const int length = 2 * params.ell;
  DeletionGraph graph(class_edges, budget);
  std::vector<int> path;
  std::vector<char> on_path(graph.verts.size(), 0);

  for (int anchor = 0; anchor < static_cast<int>(graph.verts.size());
       ++anchor) {
    graph.count_all(anchor, length, result.mono_cycles_found, path, on_path);
  }

  // Deletion loop: anchors below the current one stay cycle-free because
  // deletions never create cycles, so the first cycle found here is the
  // canonically first cycle of the whole current graph.
  for (int anchor = 0; anchor < static_cast<int>(graph.verts.size());
       ++anchor) {
    while (graph.first_cycle_at(anchor, length, path, on_path)) {
      int best_i = -1, best_j = -1;
      EdgeBits best{~0u, ~0u};
      for (std::size_t t = 0; t < path.size(); ++t) {
        const int i = path[t];
        const int j = path[(t + 1) % path.size()];
        const uint32_t mi = graph.verts[i];
        const uint32_t mj = graph.verts[j];
        const EdgeBits e{std::min(mi, mj), std::max(mi, mj)};
        if (e < best) {
          best = e;
          best_i = i;
          best_j = j;
        }
      }
      graph.remove_edge(best_i, best_j);
      ++result.deletions;
    }
  }

  std::vector<EdgeBits> kept;
  for (std::size_t i = 0; i < graph.verts.size(); ++i) {
    for (int j : graph.nbrs[i]) {
      if (static_cast<int>(i) < j) {
        kept.push_back({graph.verts[i], graph.verts[j]});
      }
    }
  }
  result.kept_edges = Subgraph(params.n, std::move(kept));

  // Independent certification through the public cycle engine.
  result.certified =
      is_cycle_free(result.kept_edges, length, budget).cycle_free;
  const double denom =
      std::pow(static_cast<double>(params.n), lower_bound_exponent(params.ell)) *
      std::pow(2.0, params.n);
  result.density_ratio =
      static_cast<double>(result.kept_edges.edge_count()) / denom;
  return result;
}

LLLReport lll_report(const ColoringParams& params, uint64_t budget) {
  LLLReport report;
  const int two_ell = 2 * params.ell;
  report.p_bound = std::pow(params.p, 2 * params.ell - 1);
  try {
    const CycleCensus c = census(params.n, two_ell, budget);
    report.x = static_cast<double>(c.common_per_edge());
    report.x_exact = true;
  } catch (const resource_limit&) {
    report.x = std::pow(static_cast<double>(params.n), params.ell - 1);
    report.x_exact = false;
  }
  report.d_bound = 2.0 * params.ell * report.x;
  report.condition = report.p_bound * (report.d_bound + 1.0) * std::numbers::e;
  report.satisfied = report.condition < 1.0;
  return report;
}

MonoCycleStats mono_cycle_stats(const ColoringParams& params, uint64_t trials,
                                uint64_t budget) {
  if (trials < 1) throw invalid_parameter("mono_cycle_stats: trials >= 1");
  const int two_ell = 2 * params.ell;
  const Subgraph qn = build_qn(params.n);
  const auto& all_edges = qn.edges();

  // Edge indices per cycle, computed once over the full Q_n.
  std::vector<std::vector<uint32_t>> cycle_edges;
  for_each_cycle(
      qn, two_ell,
      [&](const std::vector<uint32_t>& masks) {
        std::vector<uint32_t> idx;
        idx.reserve(masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i) {
          const uint32_t a = masks[i];
          const uint32_t b = masks[(i + 1) % masks.size()];
          const EdgeBits e{std::min(a, b), std::max(a, b)};
          const auto it =
              std::lower_bound(all_edges.begin(), all_edges.end(), e);
          idx.push_back(static_cast<uint32_t>(it - all_edges.begin()));
        }
        cycle_edges.push_back(std::move(idx));
        return true;
      },
      budget);

  MonoCycleStats stats;
  stats.trials = trials;
  stats.cycle_count = cycle_edges.size();

  std::vector<uint32_t> color(all_edges.size());
  double sum = 0.0, sumsq = 0.0;
  for (uint64_t t = 0; t < trials; ++t) {
    SplitMix64 gen(SplitMix64::derive_seed(params.seed, t));
    for (std::size_t i = 0; i < all_edges.size(); ++i) {
      color[i] = static_cast<uint32_t>(
          gen.next_below(static_cast<uint64_t>(params.num_colors)));
    }
    uint64_t mono = 0;
    for (const auto& cyc : cycle_edges) {
      const uint32_t c0 = color[cyc[0]];
      bool same = true;
      for (uint32_t e : cyc) {
        if (color[e] != c0) {
          same = false;
          break;
        }
      }
      mono += same;
    }
    sum += static_cast<double>(mono);
    sumsq += static_cast<double>(mono) * static_cast<double>(mono);
  }
  stats.observed_mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double var =
        (sumsq - sum * sum / static_cast<double>(trials)) /
        static_cast<double>(trials - 1);
    stats.sample_stddev = var > 0 ? std::sqrt(var) : 0.0;
  }
  stats.expected_exact =
      static_cast<double>(stats.cycle_count) /
      std::pow(static_cast<double>(params.num_colors), 2 * params.ell - 1);
  stats.expected_bound = static_cast<double>(stats.cycle_count) *
                         std::pow(params.p, 2 * params.ell - 1);
  return stats;
}

}  // namespace qcycle
