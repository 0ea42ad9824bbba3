#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qcycle/cycles.hpp"
#include "qcycle/representation.hpp"
#include "qcycle/rng.hpp"

using namespace qcycle;

namespace {

Vertex v3(int n, int a, int b, int c) {
  return Vertex::from_elements(n, {a, b, c});
}
Vertex v2(int n, int a, int b) { return Vertex::from_elements(n, {a, b}); }

}  // namespace

TEST_CASE("ell=7 sequences match the k=3 pattern exactly") {
  const Representation rep = build_representation(7, 7);
  // Default labels: a=1, b=2, x1=3, x2=4, y0=5, y1=6, y2=7.
  CHECK(rep.labels.a == 1);
  CHECK(rep.labels.b == 2);
  CHECK(rep.labels.xs == std::vector<int>{3, 4});
  CHECK(rep.labels.ys == std::vector<int>{5, 6, 7});

  const std::vector<Vertex> want_a{
      v3(7, 1, 3, 6),  // a x1 y1
      v3(7, 1, 4, 6),  // a x2 y1
      v3(7, 1, 4, 7),  // a x2 y2
      v3(7, 2, 4, 7),  // b x2 y2
      v3(7, 2, 4, 5),  // b x2 y0
      v3(7, 2, 3, 5),  // b x1 y0
      v3(7, 2, 3, 6),  // b x1 y1
  };
  CHECK(rep.a_seq == want_a);
  const std::vector<Vertex> want_b{
      v2(7, 1, 6),  // a y1
      v2(7, 1, 4),  // a x2
      v2(7, 4, 7),  // x2 y2
      v2(7, 2, 4),  // b x2
      v2(7, 2, 5),  // b y0
      v2(7, 2, 3),  // b x1
      v2(7, 3, 6),  // x1 y1
  };
  CHECK(rep.b_seq == want_b);
}

TEST_CASE("b_seq is the consecutive intersections, size 2 everywhere") {
  for (int ell : {7, 9, 11, 13}) {
    const Representation rep = build_representation(ell, ell);
    REQUIRE(rep.a_seq.size() == static_cast<std::size_t>(ell));
    REQUIRE(rep.b_seq.size() == static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) {
      CHECK(rep.b_seq[i].bits ==
            (rep.a_seq[i].bits & rep.a_seq[(i + 1) % ell].bits));
      CHECK(rep.b_seq[i].layer() == 2);
    }
  }
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(build_representation(5, 7), invalid_parameter);
  CHECK_THROWS_AS(build_representation(8, 9), invalid_parameter);
  CHECK_THROWS_AS(build_representation(7, 6), invalid_parameter);
  GroundLabels bad = GroundLabels::defaults(7);
  bad.b = bad.a;  // not injective
  CHECK_THROWS_AS(build_representation(7, 7, bad), invalid_parameter);
  GroundLabels outside = GroundLabels::defaults(7);
  outside.ys.back() = 8;  // beyond n=7
  CHECK_THROWS_AS(build_representation(7, 7, outside), invalid_parameter);
}

TEST_CASE("verification passes all six clauses for ell in {7,9,11,13}") {
  for (int ell : {7, 9, 11, 13}) {
    const Representation rep = build_representation(ell, ell);
    const VerifyReport report = verify_representation(rep);
    CHECK(report.all_pass);
    REQUIRE(report.clauses.size() == 6);
    for (const auto& c : report.clauses) CHECK(c.pass);
    // Certified cycle: 2l edges across layers 2 and 3 only.
    const Subgraph cyc = rep.interleaved_cycle();
    CHECK(cyc.edge_count() == static_cast<std::size_t>(2 * ell));
    for (const Vertex& v : cyc.vertices()) {
      CHECK((v.layer() == 2 || v.layer() == 3));
    }
    const auto cycles = enumerate_cycles(cyc, 2 * ell);
    CHECK(cycles.size() == 1);
  }
}

TEST_CASE("link sizes: L(a) has 2k-3 edges, L(b) has 4") {
  for (int ell : {7, 11}) {
    const int k = (ell - 1) / 2;
    const Representation rep = build_representation(ell, ell);
    CHECK(link(rep.hgraph, rep.labels.a).edge_count() ==
          static_cast<std::size_t>(2 * k - 3));
    CHECK(link(rep.hgraph, rep.labels.b).edge_count() == 4);
  }
}

TEST_CASE("hgraph has ell edges on 2k+1 vertices, no isolated vertex") {
  for (int ell : {7, 9, 13}) {
    const Representation rep = build_representation(ell, ell);
    CHECK(rep.hgraph.edge_count() == static_cast<std::size_t>(ell));
    CHECK(rep.hgraph.vertex_count() == static_cast<std::size_t>(ell));
  }
}

TEST_CASE("a mutated triple fails clause (i)") {
  Representation rep = build_representation(7, 7);
  rep.a_seq[2] = v3(7, 1, 3, 7);  // breaks the consecutive-intersection rule
  const VerifyReport report = check_representation(rep);
  CHECK_FALSE(report.all_pass);
  CHECK(report.first_failure == "cycle-embedding");
  CHECK_THROWS_AS(verify_representation(rep), verification_failure);
}

TEST_CASE("label equivariance: any injective relabeling verifies") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const int ell = (trial % 2) ? 9 : 7;
    const int n = ell + static_cast<int>(rng.next_below(4));
    // Random injection of 1..ell into 1..n.
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.next_below(i + 1));
      std::swap(pool[i], pool[j]);
    }
    const int k = (ell - 1) / 2;
    GroundLabels labels;
    labels.a = pool[0];
    labels.b = pool[1];
    labels.xs.assign(pool.begin() + 2, pool.begin() + 2 + (k - 1));
    labels.ys.assign(pool.begin() + 2 + (k - 1), pool.begin() + 2 * k + 1);
    REQUIRE(labels.ys.size() == static_cast<std::size_t>(k));
    const Representation rep = build_representation(ell, n, labels);
    CHECK(verify_representation(rep).all_pass);
  }
}

TEST_CASE("k-partite check: 8-cycle in layers 1..2 with k=2") {
  const int n = 4;
  const std::vector<Vertex> singles{
      Vertex::from_elements(n, {1}), Vertex::from_elements(n, {2}),
      Vertex::from_elements(n, {3}), Vertex::from_elements(n, {4})};
  const std::vector<Vertex> pairs{
      v2(n, 1, 2), v2(n, 2, 3), v2(n, 3, 4), v2(n, 1, 4)};
  std::vector<CubeEdge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(singles[i], pairs[i]);
    edges.emplace_back(pairs[i], singles[(i + 1) % 4]);
  }
  const Subgraph h(n, edges);
  const KPartiteResult r = check_kpartite_representation(h, 2);
  REQUIRE(r.ok);
  CHECK(r.edges == std::vector<std::vector<int>>{
                       {1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(r.parts == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
}

TEST_CASE("k-partite check: the representation's cycle with k=3") {
  const Representation rep = build_representation(7, 7);
  const KPartiteResult r =
      check_kpartite_representation(rep.interleaved_cycle(), 3);
  REQUIRE(r.ok);
  CHECK(r.parts == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5, 6, 7}});
  CHECK(r.edges.size() == 7);
}

TEST_CASE("k-partite check: failure report when no partition exists") {
  // Layer-3 vertex set {123, 145, 245, 345}: the co-occurrence graph is K5,
  // which admits no 3-partition.
  const int n = 5;
  std::vector<CubeEdge> edges;
  edges.emplace_back(v2(n, 4, 5), v3(n, 1, 4, 5));
  edges.emplace_back(v2(n, 4, 5), v3(n, 2, 4, 5));
  edges.emplace_back(v2(n, 4, 5), v3(n, 3, 4, 5));
  edges.emplace_back(v2(n, 1, 2), v3(n, 1, 2, 3));
  const Subgraph h(n, edges);
  const KPartiteResult r = check_kpartite_representation(h, 3);
  CHECK_FALSE(r.ok);
  CHECK(r.failure.find("exhausted") != std::string::npos);
  CHECK(r.assignments_tried > 0);
}

TEST_CASE("k-partite check: wrong layers are an error") {
  const Subgraph q2 = build_qn(2);  // layers 0..2
  CHECK_THROWS_AS(check_kpartite_representation(q2, 3), invalid_parameter);
  CHECK_THROWS_AS(check_kpartite_representation(q2, 1), invalid_parameter);
}
