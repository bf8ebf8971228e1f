#include <stdexcept>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "doctest.h"
#include "starspan/coloring.hpp"
#include "starspan/embedder.hpp"
#include "starspan/gen.hpp"
#include "starspan/graph.hpp"

using namespace starspan;
using namespace starspan::testing;

namespace {

TwoColoring all_red(int n) { return TwoColoring{complete(n)}; }

// Host whose blue graph is a perfect matching (order must be even).
TwoColoring matching_blue_host(int n) {
  std::vector<std::pair<int, int>> m;
  for (int i = 0; i + 1 < n; i += 2) m.emplace_back(i, i + 1);
  return TwoColoring{complement(Graph::from_edges(n, m))};
}

// Host whose red graph is the disjoint union of K_a and K_b.
TwoColoring two_cliques_host(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) e.emplace_back(i, j);
  for (int i = a; i < a + b; ++i)
    for (int j = i + 1; j < a + b; ++j) e.emplace_back(i, j);
  return TwoColoring{Graph::from_edges(a + b, e)};
}

// Adjacent centers 0 and 1 with a and b pendant leaves respectively.
Graph double_star(int a, int b) {
  std::vector<std::pair<int, int>> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < a; ++i) e.emplace_back(0, next++);
  for (int i = 0; i < b; ++i) e.emplace_back(1, next++);
  return Graph::from_edges(next, e);
}

bool same_outcome(const EmbedResult& a, const EmbedResult& b) {
  if (a.is_red() != b.is_red()) return false;
  if (a.is_red()) return a.embedding().map == b.embedding().map;
  if (a.stars().stars.size() != b.stars().stars.size()) return false;
  for (size_t i = 0; i < a.stars().stars.size(); ++i) {
    if (a.stars().stars[i].center != b.stars().stars[i].center) return false;
    if (a.stars().stars[i].leaves != b.stars().stars[i].leaves) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("embedder") {
  TEST_CASE("tree embedding finds a red copy in an all-red host") {
    TwoColoring col = all_red(11);
    EmbedResult r = embed_tree(col, path(10), 2);
    REQUIRE(r.is_red());
    CHECK(verify_embedding(r.embedding()));
    CHECK(r.embedding().map.size() == 10);
  }

  TEST_CASE("tree embedding hands back a blue star when the red host runs dry") {
    // red K_9 plus three vertices without red edges; P_10 cannot fit in red
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j) e.emplace_back(i, j);
    TwoColoring col{Graph::from_edges(12, e)};
    EmbedResult r = embed_tree(col, path(10), 3);
    REQUIRE(r.is_blue());
    REQUIRE(r.stars().stars.size() == 1);
    CHECK(r.stars().stars[0].leaves.size() == 3);
  }

  TEST_CASE("tree embedding of a single vertex") {
    TwoColoring col = all_red(1);
    EmbedResult r = embed_tree(col, path(1), 1);
    REQUIRE(r.is_red());
    CHECK(r.embedding().map == std::vector<int>{0});
  }

  TEST_CASE("tree embedding rejects bad inputs") {
    TwoColoring col = all_red(11);
    CHECK_THROWS_AS(embed_tree(col, path(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(embed_tree(col, cycle(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(embed_tree(col, path(10), 3), std::invalid_argument);  // needs order 12
  }

  TEST_CASE("anchored embedding places the chosen vertex on host vertex 0") {
    SUBCASE("star center, forest remainder") {
      TwoColoring col = all_red(5);
      EmbedResult r = embed_minus_vertex(col, star(3), 0, 1);
      REQUIRE(r.is_red());
      CHECK(r.embedding().map[0] == 0);
    }
    SUBCASE("star leaf, forest remainder") {
      TwoColoring col = all_red(5);
      EmbedResult r = embed_minus_vertex(col, star(3), 1, 1);
      REQUIRE(r.is_red());
      CHECK(r.embedding().map[1] == 0);
    }
    SUBCASE("pendant vertex, cyclic remainder") {
      Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
      TwoColoring col = all_red(7);
      EmbedResult r = embed_minus_vertex(col, g, 3, 2);
      REQUIRE(r.is_red());
      CHECK(r.embedding().map[3] == 0);
    }
    SUBCASE("cycle vertex, path remainder") {
      Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
      TwoColoring col = all_red(6);
      EmbedResult r = embed_minus_vertex(col, g, 1, 2);
      REQUIRE(r.is_red());
      CHECK(r.embedding().map[1] == 0);
    }
  }

  TEST_CASE("anchored embedding reports a blue star at a blue-heavy anchor") {
    Graph red = complete(6).without_edge(0, 1).without_edge(0, 2);
    TwoColoring col{red};
    EmbedResult r = embed_minus_vertex(col, star(3), 0, 2);
    REQUIRE(r.is_blue());
    REQUIRE(r.stars().stars.size() == 1);
    CHECK(r.stars().stars[0].center == 0);
  }

  TEST_CASE("anchored embedding rejects bad inputs") {
    TwoColoring col = all_red(6);
    CHECK_THROWS_AS(embed_minus_vertex(col, star(3), 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(embed_minus_vertex(col, star(3), 0, 0), std::invalid_argument);
  }

  TEST_CASE("sparse embedding of a long path against a near-red host") {
    TwoColoring col = matching_blue_host(50);
    EmbedResult r = embed_sparse(col, path(48), 2);
    REQUIRE(r.is_red());
    CHECK(verify_embedding(r.embedding()));
  }

  TEST_CASE("sparse embedding of small cyclic patterns in all-red hosts") {
    SUBCASE("six-cycle with a chord") {
      Graph g = cycle(6).with_edge(0, 3);
      EmbedResult r = embed_sparse(all_red(8), g, 2);
      REQUIRE(r.is_red());
    }
    SUBCASE("five-cycle below the recursion threshold") {
      EmbedResult r = embed_sparse(all_red(9), cycle(5), 3);
      REQUIRE(r.is_red());
    }
  }

  TEST_CASE("sparse embedding with a single-leaf star target") {
    SUBCASE("all-red host forces the red copy") {
      EmbedResult r = embed_sparse(all_red(5), path(5), 1);
      REQUIRE(r.is_red());
    }
    SUBCASE("one blue edge is enough for the blue outcome") {
      TwoColoring col{complete(5).without_edge(1, 3)};
      EmbedResult r = embed_sparse(col, path(5), 1);
      REQUIRE(r.is_blue());
      REQUIRE(r.stars().stars.size() == 1);
      CHECK(r.stars().stars[0].center == 1);
      CHECK(r.stars().stars[0].leaves == std::vector<int>{3});
    }
  }

  TEST_CASE("sparse embedding rejects bad inputs") {
    CHECK_THROWS_AS(embed_sparse(all_red(8), Graph::from_edges(4, {{0, 1}, {2, 3}}), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(embed_sparse(all_red(8), complete(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(embed_sparse(all_red(11), path(10), 2), std::invalid_argument);
  }

  TEST_CASE("sparse embedding is red whenever the host's blue degrees stay below k") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      for (int n : {10, 16}) {
        for (int k : {2, 3}) {
          Rng rng(seed * 1000 + n * 10 + k);
          long long max_e = static_cast<long long>(n) * (2 * k + 2) / (2 * k + 1);
          Graph g = random_connected_pattern(rng, n, max_e, 0);
          TwoColoring col = random_low_blue_host(rng, n + 2 * k - 2, k);
          EmbedResult r = embed_sparse(col, g, k);
          REQUIRE(r.is_red());
          CHECK(verify_embedding(r.embedding()));
        }
      }
    }
  }

  TEST_CASE("sparse embedding settles arbitrary hosts one way or the other") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Rng rng(seed);
      const int n = 12, k = 2, N = n + 2 * k - 2;
      long long max_e = static_cast<long long>(N) * (N - 1) / 2;
      long long e = N - 1 + static_cast<long long>(rng.below(max_e - (N - 1) + 1));
      TwoColoring col{random_connected_with_edges(rng, N, e)};
      Graph g = random_connected_pattern(rng, n, static_cast<long long>(n) * 6 / 5, 0);
      EmbedResult r = embed_sparse(col, g, k);
      CHECK((r.is_red() || r.stars().stars.size() == 1));
    }
  }

  TEST_CASE("sparse embedding is deterministic under identical inputs") {
    Rng rng1(99), rng2(99);
    TwoColoring a = random_low_blue_host(rng1, 14, 2);
    TwoColoring b = random_low_blue_host(rng2, 14, 2);
    Graph g = path(12);
    CHECK(same_outcome(embed_sparse(a, g, 2), embed_sparse(b, g, 2)));
  }

  TEST_CASE("spanning embedding on a long path with matching-tight host order") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Rng rng(seed);
      TwoColoring col = random_low_blue_host(rng, 48, 2);
      EmbedResult r = embed_spanning(col, path(48), 2);
      REQUIRE(r.is_red());
      CHECK(verify_embedding(r.embedding()));
    }
  }

  TEST_CASE("spanning embedding of a spider lands in the end-edge branch") {
    Graph g = spider(std::vector<int>(16, 3));  // order 49
    SUBCASE("host order equals the pattern order") {
      EmbedResult r = embed_spanning(all_red(49), g, 2);
      REQUIRE(r.is_red());
    }
    SUBCASE("near-red host one vertex larger") {
      Rng rng(7);
      TwoColoring col = random_low_blue_host(rng, 50, 2);
      EmbedResult r = embed_spanning(col, g, 2);
      REQUIRE(r.is_red());
    }
  }

  TEST_CASE("spanning embedding of a large star uses the pendant branch") {
    EmbedResult r = embed_spanning(all_red(49), star(47), 2);
    REQUIRE(r.is_red());
    CHECK(verify_embedding(r.embedding()));
  }

  TEST_CASE("spanning embedding demands the independence slack the host is missing") {
    // a star has no independent vertices beyond any closed neighborhood,
    // so a host of bare pattern order is refused
    CHECK_THROWS_AS(embed_spanning(all_red(48), star(47), 2), std::invalid_argument);
  }

  TEST_CASE("spanning embedding copes with a host holding exactly one blue star") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Rng rng(seed);
      TwoColoring col = adversarial_single_star_host(rng, 48, 2);
      EmbedResult r = embed_spanning(col, path(48), 2);
      CHECK((r.is_red() || r.stars().stars.size() == 1));
    }
  }

  TEST_CASE("spanning embedding rejects bad inputs") {
    CHECK_THROWS_AS(embed_spanning(all_red(48), path(47), 2), std::invalid_argument);
    CHECK_THROWS_AS(embed_spanning(all_red(8), Graph::from_edges(4, {{0, 1}, {2, 3}}), 2),
                    std::invalid_argument);
    Rng rng(11);
    Graph dense = random_connected_with_edges(rng, 48, 50);
    CHECK_THROWS_AS(embed_spanning(all_red(60), dense, 2), std::invalid_argument);
  }

  TEST_CASE("multistar embedding with one star delegates to the spanning form") {
    Rng rng(5);
    TwoColoring col = random_low_blue_host(rng, 48, 2);
    EmbedResult a = embed_vs_multistar(col, path(48), 2, 1);
    EmbedResult b = embed_spanning(col, path(48), 2);
    CHECK(same_outcome(a, b));
  }

  TEST_CASE("multistar embedding with single-edge stars") {
    SUBCASE("path pattern, one blue edge in the host") {
      TwoColoring col{complete(113).without_edge(0, 1)};
      EmbedResult r = embed_vs_multistar(col, path(112), 1, 2);
      REQUIRE(r.is_red());
      CHECK(verify_embedding(r.embedding()));
    }
    SUBCASE("star pattern, one blue edge in the host") {
      TwoColoring col{complete(113).without_edge(0, 1)};
      EmbedResult r = embed_vs_multistar(col, star(111), 1, 2);
      REQUIRE(r.is_red());
      CHECK(verify_embedding(r.embedding()));
    }
    SUBCASE("double star pattern, one blue edge in the host") {
      TwoColoring col{complete(113).without_edge(0, 1)};
      EmbedResult r = embed_vs_multistar(col, double_star(55, 55), 1, 2);
      REQUIRE(r.is_red());
      CHECK(verify_embedding(r.embedding()));
    }
    SUBCASE("split host forces two blue edges") {
      TwoColoring col = two_cliques_host(56, 57);
      EmbedResult r = embed_vs_multistar(col, path(112), 1, 2);
      REQUIRE(r.is_blue());
      CHECK(r.stars().stars.size() == 2);
    }
  }

  TEST_CASE("multistar embedding at the guarantee threshold") {
    SUBCASE("all-red host") {
      EmbedResult r = embed_vs_multistar(all_red(897), path(896), 2, 2);
      REQUIRE(r.is_red());
    }
    SUBCASE("blue matching plus one blue two-star leaves only the red copy") {
      std::vector<std::pair<int, int>> blue{{0, 1}, {0, 2}};
      for (int i = 3; i + 1 < 897; i += 2) blue.emplace_back(i, i + 1);
      TwoColoring col{complement(Graph::from_edges(897, blue))};
      EmbedResult r = embed_vs_multistar(col, path(896), 2, 2);
      REQUIRE(r.is_red());
      CHECK(verify_embedding(r.embedding()));
    }
    SUBCASE("split host forces two blue stars") {
      TwoColoring col = two_cliques_host(448, 449);
      EmbedResult r = embed_vs_multistar(col, path(896), 2, 2);
      REQUIRE(r.is_blue());
      CHECK(r.stars().stars.size() == 2);
    }
  }

  TEST_CASE("multistar embedding rejects bad inputs") {
    CHECK_THROWS_AS(embed_vs_multistar(all_red(897), path(895), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(embed_vs_multistar(all_red(896), path(896), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(embed_vs_multistar(all_red(10), path(8), 2, 0), std::invalid_argument);
  }
}
