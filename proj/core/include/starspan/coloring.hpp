#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "starspan/graph.hpp"

namespace starspan {

// A red/blue edge-coloring of a complete graph: red edges are stored as a
// graph, blue adjacency is answered by complement queries and never
// materialized.
class TwoColoring {
public:
  TwoColoring() = default;
  explicit TwoColoring(Graph red) : red_(std::move(red)) {}

  int order() const { return red_.order(); }
  const Graph& red() const { return red_; }

  bool is_red(int u, int v) const { return red_.adjacent(u, v); }
  bool is_blue(int u, int v) const { return u != v && !red_.adjacent(u, v); }
  int red_degree(int v) const { return red_.degree(v); }
  int blue_degree(int v) const { return order() - 1 - red_.degree(v); }
  const Bitset& red_row(int v) const { return red_.row(v); }
  Bitset blue_row(int v) const {
    Bitset b = ~red_.row(v);
    b.reset(v);
    return b;
  }

private:
  Graph red_;
};

struct ColoringMap {
  TwoColoring col;
  std::vector<int> to_original;
};

ColoringMap restrict_coloring(const TwoColoring& col, const std::vector<int>& keep);
ColoringMap restrict_coloring(const TwoColoring& col, const Bitset& keep);

struct BlueStar {
  int center = -1;
  std::vector<int> leaves;
};

// First vertex (ascending, outside `forbidden`) whose blue degree within the
// allowed set is >= k, with its first k allowed blue neighbors.  Absent over
// the full vertex set iff every red degree is >= order - k.
std::optional<BlueStar> find_blue_star(const TwoColoring& col, int k, const Bitset& forbidden);
std::optional<BlueStar> find_blue_star(const TwoColoring& col, int k);

struct StarPack {
  std::vector<BlueStar> stars;
  Bitset vertex_set;  // union of all star vertices
};

struct PackResult {
  bool reached_t = false;
  StarPack pack;  // t stars on success, else the maximal greedy pack
};

// Greedy maximal packing of vertex-disjoint blue k-stars: repeatedly takes
// find_blue_star avoiding used vertices.  When it stops short of t, no blue
// k-star exists among the unused vertices (greedy maximality).
PackResult pack_blue_stars(const TwoColoring& col, int k, int t);

bool verify_star_pack(const TwoColoring& col, const StarPack& pack, int k);

enum class MatchingOutcomeKind { RedMatching, BlueBiclique };

struct MatchingOutcome {
  MatchingOutcomeKind kind = MatchingOutcomeKind::RedMatching;
  // RedMatching: disjoint red (x, y) pairs covering X.
  std::vector<std::pair<int, int>> matching;
  // BlueBiclique: every x_side / y_side pair is blue; |x_side| = c + 1,
  // y_side = Y minus the red neighborhood of x_side (|Y| - c vertices).
  int c = 0;
  std::vector<int> x_side;
  std::vector<int> y_side;
};

// Maximum red matching between disjoint vertex sets X and Y (|X| <= |Y|).
// If it covers X, RedMatching; otherwise a Hall violator S reached by
// alternating paths from the first uncovered X-vertex gives a blue complete
// bipartite pair (S, Y minus N_red(S)).
MatchingOutcome red_matching_or_blue_biclique(const TwoColoring& col, const std::vector<int>& X,
                                              const std::vector<int>& Y);

bool verify_matching_outcome(const TwoColoring& col, const std::vector<int>& X,
                             const std::vector<int>& Y, const MatchingOutcome& out);

}  // namespace starspan
