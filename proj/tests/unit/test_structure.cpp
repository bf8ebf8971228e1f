#include <stdexcept>

#include "builders.hpp"
#include "doctest.h"
#include "starspan/structure.hpp"

using namespace starspan;
using namespace starspan::testing;

TEST_SUITE("structure") {
  TEST_CASE("suspended path: a path graph is its own certificate") {
    auto p = find_suspended_path(path(6), 4);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{0, 1, 2, 3, 4, 5});
  }

  TEST_CASE("suspended path: stars have none") {
    CHECK(!find_suspended_path(star(9), 4).has_value());
  }

  TEST_CASE("suspended path: chain between two triangles") {
    // Triangles {0,1,2} and {8,9,10} joined by the chain 3..7.
    auto g = Graph::from_edges(11, {{0, 1}, {0, 2}, {1, 2},
                                    {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                                    {8, 9}, {8, 10}, {9, 10}});
    auto p = find_suspended_path(g, 5);
    REQUIRE(p.has_value());
    // Anchors included: degree-3 vertices 2 and 8 cap the degree-2 run.
    CHECK(*p == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
  }

  TEST_CASE("suspended path: cycles are walked whole") {
    auto p = find_suspended_path(cycle(10), 3);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  }

  TEST_CASE("suspended path: too few vertices means none") {
    CHECK(!find_suspended_path(path(4), 5).has_value());
  }

  TEST_CASE("suspended path: argument validation") {
    CHECK_THROWS_AS(find_suspended_path(path(6), 2), std::invalid_argument);
    auto split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(find_suspended_path(split, 3), std::invalid_argument);
  }

  TEST_CASE("end edges: one per spider leg") {
    auto m = find_end_edge_matching(spider({2, 2, 2}), 3);
    REQUIRE(m.has_value());
    CHECK(*m == std::vector<std::pair<int, int>>{{2, 1}, {4, 3}, {6, 5}});
  }

  TEST_CASE("end edges: shared supports are deduplicated") {
    auto m = find_end_edge_matching(spider({1, 1, 2}), 2);
    REQUIRE(m.has_value());
    CHECK(*m == std::vector<std::pair<int, int>>{{1, 0}, {4, 3}});
  }

  TEST_CASE("end edges: a star never yields two") {
    CHECK(!find_end_edge_matching(star(9), 2).has_value());
  }

  TEST_CASE("end edges: single edge graph") {
    auto m = find_end_edge_matching(path(2), 1);
    REQUIRE(m.has_value());
    CHECK(*m == std::vector<std::pair<int, int>>{{0, 1}});
    // Both endpoints are each other's support; a second disjoint pair is impossible.
    CHECK(!find_end_edge_matching(path(2), 2).has_value());
  }

  TEST_CASE("end edges: argument validation") {
    CHECK_THROWS_AS(find_end_edge_matching(path(4), 0), std::invalid_argument);
    auto split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(find_end_edge_matching(split, 1), std::invalid_argument);
  }

  TEST_CASE("sparsity thresholds are exact at the boundary") {
    // n = 48, k = 2: the edge budget is n(1 + 1/36), i.e. 49 edges pass, 50 fail.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 48; ++i) e.emplace_back(i, (i + 1) % 48);
    e.emplace_back(0, 24);
    auto g49 = Graph::from_edges(48, e);
    auto c49 = sparsity_check(g49, 2, 2);
    CHECK(c49.star_ok);
    CHECK(c49.sparse_embed_ok);
    // The two-pack budget n(1 + 1/84) allows only 48 edges here.
    CHECK(!c49.multistar_ok);

    e.emplace_back(1, 25);
    auto c50 = sparsity_check(Graph::from_edges(48, e), 2, 2);
    CHECK(!c50.star_ok);
    CHECK(c50.sparse_embed_ok);
  }

  TEST_CASE("sparsity: trees pass every budget") {
    auto c = sparsity_check(path(10), 3, 2);
    CHECK(c.star_ok);
    CHECK(c.multistar_ok);
    CHECK(c.sparse_embed_ok);
  }

  TEST_CASE("sparsity: argument validation") {
    CHECK_THROWS_AS(sparsity_check(path(4), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sparsity_check(path(4), 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sparsity_check(Graph(0), 2, 1), std::invalid_argument);
  }

  TEST_CASE("degree-sum screen") {
    CHECK(caro_wei_check(path(180), 2));       // long path: sparse, low degree, big enough
    CHECK(!caro_wei_check(star(179), 2));      // hub degree too large
    CHECK(!caro_wei_check(path(179), 2));      // one vertex short of the order bound
    CHECK_THROWS_AS(caro_wei_check(path(180), 1), std::invalid_argument);
  }

  TEST_CASE("low degree count") {
    // House: square 0-1-2-3 with roof apex 4 over the 0-1 wall.
    auto house = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
    CHECK(count_low_degree(house) == 3);
    CHECK(count_low_degree(complete(4)) == 0);
    CHECK(count_low_degree(path(5)) == 5);
  }

  TEST_CASE("trichotomy: long paths land in the first branch") {
    auto cert = trichotomy(path(50), 10, 3);
    CHECK(cert.kind == TrichotomyKind::SuspendedPath);
    CHECK(cert.ell == -1);
    CHECK(cert.gamma == 9);  // (q-2)(2s+3*ell-2)+1 = 8*1+1
    CHECK(static_cast<int>(cert.path.size()) == 50);
    CHECK(verify_trichotomy(path(50), cert));
  }

  TEST_CASE("trichotomy: spiders land in the second branch") {
    auto cert = trichotomy(spider({2, 2, 2}), 4, 3);
    CHECK(cert.kind == TrichotomyKind::EndEdgeMatching);
    CHECK(cert.edges == std::vector<std::pair<int, int>>{{2, 1}, {4, 3}, {6, 5}});
    CHECK(verify_trichotomy(spider({2, 2, 2}), cert));
  }

  TEST_CASE("trichotomy: stars land in the third branch") {
    auto cert = trichotomy(star(9), 4, 3);
    CHECK(cert.kind == TrichotomyKind::BoundedCoreStar);
    CHECK(cert.gamma == 3);
    CHECK(cert.core_vertices == std::vector<int>{0});
    CHECK(cert.star_center == 0);
    CHECK(static_cast<int>(cert.star_leaves.size()) == 9);
    CHECK(verify_trichotomy(star(9), cert));
  }

  TEST_CASE("trichotomy: the vacuous corner is reported, not fudged") {
    // s = 2 with a tree makes the core budget negative; only stars reach
    // the third branch there, and no certificate can satisfy it.
    CHECK_THROWS_AS(trichotomy(star(9), 4, 2), std::domain_error);
  }

  TEST_CASE("trichotomy: argument validation") {
    CHECK_THROWS_AS(trichotomy(path(50), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(trichotomy(path(50), 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(trichotomy(path(5), 10, 3), std::invalid_argument);
    auto split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(trichotomy(split, 3, 2), std::invalid_argument);
  }

  TEST_CASE("trichotomy: tampered certificates fail verification") {
    auto g = path(50);
    auto cert = trichotomy(g, 10, 3);
    auto bad = cert;
    bad.path[1] = bad.path[0];  // duplicate vertex
    CHECK(!verify_trichotomy(g, bad));
    bad = cert;
    bad.gamma += 1;
    CHECK(!verify_trichotomy(g, bad));
    bad = cert;
    bad.kind = TrichotomyKind::EndEdgeMatching;  // wrong variant, empty payload
    CHECK(!verify_trichotomy(g, bad));
  }

  TEST_CASE("reduce_once: pendant vertices go first") {
    auto [g2, step] = reduce_once(path(4));
    CHECK(step.kind == ReductionKind::Degree1);
    CHECK(step.removed_vertex == 0);
    CHECK(step.neighbors == std::vector<int>{1});
    CHECK(!step.added_edge.has_value());
    CHECK(g2.order() == 3);
    CHECK(g2.edge_list() == path(3).edge_list());
  }

  TEST_CASE("reduce_once: non-cut degree-2 vertices go second") {
    auto [g2, step] = reduce_once(cycle(4));
    CHECK(step.kind == ReductionKind::Degree2NonCut);
    CHECK(step.removed_vertex == 0);
    CHECK(step.neighbors == std::vector<int>{1, 3});
    CHECK(g2.edge_list() == path(3).edge_list());
  }

  TEST_CASE("reduce_once: triangle corners beat the bridge vertex") {
    // Two triangles joined through degree-2 vertex 3: the corners 0,1,5,6
    // are degree-2 non-cut, so the smallest corner wins over the bridge.
    auto g = Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4},
                                   {4, 5}, {4, 6}, {5, 6}});
    auto [g2, step] = reduce_once(g);
    CHECK(step.kind == ReductionKind::Degree2NonCut);
    CHECK(step.removed_vertex == 0);
  }

  TEST_CASE("reduce_once: cut vertices get a replacement edge") {
    // Two K_4 blocks joined through degree-2 vertex 4; no other vertex has
    // degree <= 2, so the cut vertex is removed and its neighbors joined.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) e.emplace_back(i, j);
    for (int i = 5; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j) e.emplace_back(i, j);
    e.emplace_back(3, 4);
    e.emplace_back(4, 5);
    auto g = Graph::from_edges(9, e);
    REQUIRE(g.size() == 14);

    auto [g2, step] = reduce_once(g);
    CHECK(step.kind == ReductionKind::Degree2Cut);
    CHECK(step.removed_vertex == 4);
    CHECK(step.neighbors == std::vector<int>{3, 5});
    REQUIRE(step.added_edge.has_value());
    CHECK(*step.added_edge == std::pair<int, int>{3, 5});
    CHECK(g2.order() == 8);
    CHECK(g2.size() == 13);
    CHECK(g2.connected());
  }

  TEST_CASE("reduce_once: no low-degree vertex means no step") {
    CHECK_THROWS_AS(reduce_once(complete(4)), std::invalid_argument);
  }

  TEST_CASE("reduce_k peels a path from its front") {
    auto [g2, trace] = reduce_k(path(10), 3);
    REQUIRE(trace.size() == 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(trace[i].kind == ReductionKind::Degree1);
      CHECK(trace[i].removed_vertex == i);
      CHECK(trace[i].neighbors == std::vector<int>{i + 1});
    }
    CHECK(g2.order() == 7);
    CHECK(g2.edge_list() == path(7).edge_list());
  }

  TEST_CASE("reduce_k turns a cycle into a path") {
    auto [g2, trace] = reduce_k(cycle(10), 2);
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].kind == ReductionKind::Degree2NonCut);
    CHECK(trace[0].removed_vertex == 0);
    CHECK(trace[1].kind == ReductionKind::Degree1);
    CHECK(trace[1].removed_vertex == 1);
    CHECK(g2.order() == 8);
    CHECK(g2.edge_list() == path(8).edge_list());
  }

  TEST_CASE("reduce_k stalls with partial results") {
    try {
      reduce_k(complete(4), 2);
      FAIL("expected a stall");
    } catch (const ReductionStall& stall) {
      CHECK(stall.partial_trace().empty());
      CHECK(stall.partial_graph().order() == 4);
    }
    try {
      reduce_k(path(3), 5);
      FAIL("expected a stall");
    } catch (const ReductionStall& stall) {
      CHECK(stall.partial_trace().size() == 2);
      CHECK(stall.partial_graph().order() == 1);
    }
  }

  TEST_CASE("replay reproduces the reduction") {
    auto [g2, trace] = reduce_k(cycle(10), 2);
    auto replayed = replay_reduction(cycle(10), trace);
    CHECK(replayed.order() == g2.order());
    CHECK(replayed.edge_list() == g2.edge_list());
  }

  TEST_CASE("backward replay rebuilds the original") {
    auto [g2, trace] = reduce_k(cycle(10), 2);
    auto rebuilt = replay_reduction_backward(g2, trace, 10);
    CHECK(rebuilt.edge_list() == cycle(10).edge_list());
  }

  TEST_CASE("replay handles replacement edges in both directions") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) e.emplace_back(i, j);
    for (int i = 5; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j) e.emplace_back(i, j);
    e.emplace_back(3, 4);
    e.emplace_back(4, 5);
    auto g = Graph::from_edges(9, e);

    auto [g2, trace] = reduce_k(g, 1);
    auto forward = replay_reduction(g, trace);
    CHECK(forward.edge_list() == g2.edge_list());
    auto rebuilt = replay_reduction_backward(g2, trace, 9);
    CHECK(rebuilt.edge_list() == g.edge_list());
  }

  TEST_CASE("replay rejects a tampered trace") {
    auto [g2, trace] = reduce_k(path(10), 2);
    auto bad = trace;
    bad[0].removed_vertex = 5;
    CHECK_THROWS_AS(replay_reduction(path(10), bad), std::invalid_argument);
    bad = trace;
    bad[1].neighbors = {7};
    CHECK_THROWS_AS(replay_reduction(path(10), bad), std::invalid_argument);
    bad = trace;
    bad[0].added_edge = {1, 2};
    CHECK_THROWS_AS(replay_reduction(path(10), bad), std::invalid_argument);
  }
}
