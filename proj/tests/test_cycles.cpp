#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qcycle/cycles.hpp"
#include "qcycle/rng.hpp"

using namespace qcycle;

namespace {

// Independent witness validation: adjacency, distinctness, length.
void require_valid_witness(const CycleWitness& w, const Subgraph& g,
                           int two_ell) {
  REQUIRE(w.length() == two_ell);
  std::set<uint32_t> seen;
  for (int i = 0; i < w.length(); ++i) {
    const Vertex& u = w.vertices[i];
    const Vertex& v = w.vertices[(i + 1) % w.length()];
    CHECK(are_adjacent(u, v));
    CHECK(g.has_edge({std::min(u.bits, v.bits), std::max(u.bits, v.bits)}));
    seen.insert(u.bits);
  }
  CHECK(seen.size() == static_cast<std::size_t>(two_ell));
}

Subgraph random_subgraph(int n, uint64_t seed, int keep_percent) {
  SplitMix64 rng(seed);
  const Subgraph full = build_qn(n);
  std::vector<EdgeBits> edges;
  for (const EdgeBits& e : full.edges()) {
    if (rng.next_below(100) < static_cast<uint64_t>(keep_percent)) {
      edges.push_back(e);
    }
  }
  return Subgraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("Q_2 is a single 4-cycle") {
  const auto cycles = enumerate_cycles(build_qn(2), 4);
  REQUIRE(cycles.size() == 1);
  require_valid_witness(cycles.front(), build_qn(2), 4);
}

TEST_CASE("Q_3 counts: 6 squares (C(n,2)*2^(n-2)) and 16 hexagons") {
  const Subgraph q3 = build_qn(3);
  CHECK(enumerate_cycles(q3, 4).size() == 6);
  CHECK(enumerate_cycles(q3, 6).size() == 16);
  // Cross-checks against the independent oracles.
  CHECK(oracle::naive_cycle_count(q3, 4) == 6);
  CHECK(oracle::naive_cycle_count(q3, 6) == 16);
  const auto traced = oracle::trace_cycle_counts(q3);
  CHECK(traced.squares == 6);
  CHECK(traced.hexagons == 16);
}

TEST_CASE("odd length is rejected") {
  CHECK_THROWS_AS(enumerate_cycles(build_qn(3), 5), invalid_parameter);
  CHECK_THROWS_AS(census(3, 7), invalid_parameter);
  CHECK_THROWS_AS(enumerate_cycles(build_qn(3), 2), invalid_parameter);
}

TEST_CASE("enumeration limit stops early and is a prefix") {
  const auto all = enumerate_cycles(build_qn(3), 4);
  const auto some = enumerate_cycles(build_qn(3), 4, 2);
  REQUIRE(some.size() == 2);
  CHECK(some[0].vertices == all[0].vertices);
  CHECK(some[1].vertices == all[1].vertices);
}

TEST_CASE("witnesses are canonical and unique") {
  for (int two_ell : {4, 6, 8}) {
    const auto cycles = enumerate_cycles(build_qn(4), two_ell);
    std::set<std::vector<uint32_t>> seen;
    for (const CycleWitness& w : cycles) {
      require_valid_witness(w, build_qn(4), two_ell);
      // Canonical form: starts at the minimum, second below last.
      uint32_t min_bits = w.vertices.front().bits;
      for (const Vertex& v : w.vertices) min_bits = std::min(min_bits, v.bits);
      CHECK(w.vertices.front().bits == min_bits);
      CHECK(w.vertices[1].bits < w.vertices.back().bits);
      std::vector<uint32_t> key;
      for (const Vertex& v : w.vertices) key.push_back(v.bits);
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("support of a witness spans at most l positions") {
  for (int two_ell : {4, 6, 8}) {
    for (const CycleWitness& w : enumerate_cycles(build_qn(4), two_ell)) {
      CHECK(w.support().layer() <= two_ell / 2);
    }
  }
}

TEST_CASE("census (3,4): total 6, every per-edge count 2") {
  const CycleCensus c = census(3, 4);
  CHECK(c.total == 6);
  CHECK(c.uniform());
  CHECK(c.common_per_edge() == 2);
  // 2l * N == n * 2^(n-1) * x: 4*6 == 12*2
  CHECK(4 * c.total == 12 * c.common_per_edge());
}

TEST_CASE("census (2,4): total 1, per-edge 1") {
  const CycleCensus c = census(2, 4);
  CHECK(c.total == 1);
  CHECK(c.common_per_edge() == 1);
}

TEST_CASE("census (4,6) agrees with the trace oracle") {
  const CycleCensus c = census(4, 6);
  const auto traced = oracle::trace_cycle_counts(build_qn(4));
  CHECK(c.total == static_cast<uint64_t>(traced.hexagons));
  CHECK(c.total == 128);  // frozen from the oracle
  CHECK(c.uniform());
  // 2l * N == n * 2^(n-1) * x: 6*128 == 32*24
  CHECK(6 * c.total == 32 * c.common_per_edge());
  CHECK(c.common_per_edge() == 24);
}

TEST_CASE("double counting identity 2l*N == sum of per-edge counts") {
  for (auto [n, two_ell] : {std::pair{2, 4}, {3, 4}, {3, 6}, {4, 4}, {4, 6},
                            {4, 8}, {5, 4}}) {
    const CycleCensus c = census(n, two_ell);
    uint64_t sum = 0;
    for (uint64_t x : c.per_edge) sum += x;
    CHECK(static_cast<uint64_t>(two_ell) * c.total == sum);
    CHECK(c.uniform());
  }
}

TEST_CASE("enumeration agrees with the naive oracle on random subgraphs") {
  SplitMix64 seeds(20260810);
  int tested = 0;
  for (int t = 0; tested < 25 && t < 200; ++t) {
    const int n = 2 + static_cast<int>(seeds.next_below(2));  // 2..3
    const Subgraph g = random_subgraph(n, seeds.next(), 65);
    if (g.edge_count() > 24 || g.edge_count() < 4) continue;
    ++tested;
    for (int two_ell : {4, 6}) {
      CHECK(enumerate_cycles(g, two_ell).size() ==
            oracle::naive_cycle_count(g, two_ell));
    }
  }
  CHECK(tested == 25);
}

TEST_CASE("trace oracle agrees on random subgraphs of Q_4") {
  SplitMix64 seeds(42);
  for (int t = 0; t < 10; ++t) {
    const Subgraph g = random_subgraph(4, seeds.next(), 70);
    if (g.edge_count() == 0) continue;
    const auto traced = oracle::trace_cycle_counts(g);
    CHECK(enumerate_cycles(g, 4).size() ==
          static_cast<std::size_t>(traced.squares));
    CHECK(enumerate_cycles(g, 6).size() ==
          static_cast<std::size_t>(traced.hexagons));
  }
}

TEST_CASE("is_cycle_free: path vs cycle") {
  const Subgraph q2 = build_qn(2);
  std::vector<EdgeBits> path_edges(q2.edges().begin(), q2.edges().end() - 1);
  const Subgraph path(2, path_edges);
  CHECK(is_cycle_free(path, 4).cycle_free);
  const CycleFreeResult full = is_cycle_free(q2, 4);
  CHECK_FALSE(full.cycle_free);
  REQUIRE(full.witness.has_value());
  require_valid_witness(*full.witness, q2, 4);
}

TEST_CASE("budget exhaustion raises resource_limit") {
  CHECK_THROWS_AS(census(4, 6, /*budget=*/50), resource_limit);
  CHECK_THROWS_AS(enumerate_cycles(build_qn(4), 6, 0, /*budget=*/50),
                  resource_limit);
}

TEST_CASE("check_counting_bound table") {
  const auto empty = check_counting_bound({}, 4);
  CHECK(empty.empty());
  const auto rows = check_counting_bound({2, 3, 4}, 4);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.ratio <= 1.0);
    CHECK(row.denominator > 0);
    CHECK(row.total <= row.denominator);
  }
  const auto rows6 = check_counting_bound({3, 4}, 6);
  for (const auto& row : rows6) {
    CHECK(row.ratio <= 1.0);
    CHECK(std::isfinite(row.ratio));
  }
}

TEST_CASE("witness text block carries the edge list and cycle line") {
  const auto cycles = enumerate_cycles(build_qn(2), 4);
  const std::string text = to_witness_text(cycles.front());
  CHECK(text.find("dim=2") == 0);
  CHECK(text.find("cycle: {}") != std::string::npos);
}
