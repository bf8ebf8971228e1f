#include <stdexcept>

#include "builders.hpp"
#include "doctest.h"
#include "starspan/graph.hpp"

using namespace starspan;
using namespace starspan::testing;

TEST_SUITE("graph") {
  TEST_CASE("from_edges validates input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  }

  TEST_CASE("basic accessors on a path") {
    Graph g = path(4);
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.neighbor_list(1) == std::vector<int>{0, 2});
    CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.connected());
    CHECK(g.is_tree());
    CHECK(g.is_forest());
  }

  TEST_CASE("connectivity and components") {
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}});
    CHECK_FALSE(g.connected());
    CHECK(g.component_count() == 3);
    auto ids = g.component_ids();
    CHECK(ids[0] == ids[1]);
    CHECK(ids[2] == ids[3]);
    CHECK(ids[0] != ids[2]);
    CHECK(ids[4] != ids[0]);
    CHECK_FALSE(g.is_tree());
    CHECK(g.is_forest());

    CHECK(cycle(4).connected());
    CHECK_FALSE(cycle(4).is_forest());
    CHECK(Graph(1).connected());
    CHECK(Graph(0).connected());
    CHECK_FALSE(Graph(2).connected());
  }

  TEST_CASE("cut vertices and bridges") {
    Graph p = path(4);
    auto flags = p.cut_vertex_flags();
    CHECK_FALSE(flags[0]);
    CHECK(flags[1]);
    CHECK(flags[2]);
    CHECK_FALSE(flags[3]);
    CHECK(p.bridge_list() == p.edge_list());

    Graph c = cycle(5);
    for (bool f : c.cut_vertex_flags()) CHECK_FALSE(f);
    CHECK(c.bridge_list().empty());

    // Bowtie: two triangles sharing vertex 2.
    Graph bow = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto bf = bow.cut_vertex_flags();
    CHECK(bf[2]);
    CHECK_FALSE(bf[0]);
    CHECK(bow.bridge_list().empty());
  }

  TEST_CASE("edge addition and removal") {
    Graph g = path(3);
    Graph g2 = g.with_edge(0, 2);
    CHECK(g2.size() == 3);
    CHECK(g2.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(g.with_edge(0, 1), std::invalid_argument);
    Graph g3 = g2.without_edge(0, 2);
    CHECK(g3 == g);
    CHECK_THROWS_AS(g.without_edge(0, 2), std::invalid_argument);
  }

  TEST_CASE("complement") {
    Graph g = complement(path(4));
    CHECK(g.size() == 3);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(complement(complete(5)).size() == 0);
  }

  TEST_CASE("induced subgraphs preserve the requested order") {
    Graph g = path(5);
    auto sub = induced_subgraph(g, std::vector<int>{3, 2, 0});
    CHECK(sub.graph.order() == 3);
    CHECK(sub.to_original == std::vector<int>{3, 2, 0});
    CHECK(sub.graph.adjacent(0, 1));  // 3-2
    CHECK_FALSE(sub.graph.adjacent(1, 2));

    Bitset keep(5);
    keep.set(1);
    keep.set(2);
    keep.set(4);
    auto sub2 = induced_subgraph(g, keep);
    CHECK(sub2.to_original == std::vector<int>{1, 2, 4});
    CHECK(sub2.graph.size() == 1);
  }

  TEST_CASE("vertex deletion helpers") {
    Graph g = path(4);
    auto d = delete_vertices(g, {1});
    CHECK(d.graph.order() == 3);
    CHECK(d.to_original == std::vector<int>{0, 2, 3});
    CHECK(d.graph.size() == 1);

    auto local = local_deleted_graph(path(4), 0);
    CHECK(local.to_original == std::vector<int>{2, 3});
    CHECK(local.graph.size() == 1);

    auto local2 = local_deleted_graph(star(4), 0);
    CHECK(local2.graph.order() == 0);
  }

  TEST_CASE("bit helpers") {
    Bitset b = mask_of(6, {4, 1});
    CHECK(bits(b) == std::vector<int>{1, 4});
    CHECK(b.count() == 2);
  }
}
