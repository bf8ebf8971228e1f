#pragma once

#include <vector>

#include "starspan/graph.hpp"

namespace starspan {

// adj[x] is a bitset of size ny holding the right-side neighbors of left
// vertex x.  Augmenting-path search visits left vertices in ascending order
// and scans right candidates ascending, so results are deterministic.
struct BipartiteMatching {
  std::vector<int> match_x;  // matched right index per left vertex, -1 if none
  std::vector<int> match_y;  // matched left index per right vertex, -1 if none
  int size = 0;
};

BipartiteMatching maximum_bipartite_matching(const std::vector<Bitset>& adj, int ny);

// When the matching leaves a left vertex uncovered, alternating reachability
// from the first such vertex yields a set S of left vertices whose combined
// neighborhood has exactly |S| - 1 elements.
struct HallViolator {
  std::vector<int> x_side;       // S, ascending
  std::vector<int> y_neighbors;  // N(S), ascending, |S| - 1 elements
};

HallViolator hall_violator(const std::vector<Bitset>& adj, int ny, const BipartiteMatching& m);

}  // namespace starspan
