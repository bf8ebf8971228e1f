#pragma once

#include <variant>
#include <vector>

#include "starspan/coloring.hpp"
#include "starspan/graph.hpp"

namespace starspan {

// A hosted red copy of a pattern graph: map[p] is the host vertex carrying
// pattern vertex p, every pattern edge lands on a red host edge.
struct Embedding {
  Graph pattern;
  TwoColoring host;
  std::vector<int> map;
};

// map is injective, in range, and red-realizes every pattern edge.
bool verify_embedding(const Embedding& e);

// The constructive dichotomy every embedding routine returns: either a
// verified red copy of the pattern or a verified pack of disjoint blue
// stars (one star for the single-star routines, t for the multistar one).
// Construction verifies the carried certificate and throws std::logic_error
// if it does not check out, so a returned result is always self-consistent.
class EmbedResult {
 public:
  static EmbedResult red(Embedding e);
  static EmbedResult blue(const TwoColoring& col, StarPack pack, int k);

  bool is_red() const { return std::holds_alternative<Embedding>(v_); }
  bool is_blue() const { return !is_red(); }
  const Embedding& embedding() const { return std::get<Embedding>(v_); }
  const StarPack& stars() const { return std::get<StarPack>(v_); }

 private:
  explicit EmbedResult(std::variant<Embedding, StarPack> v) : v_(std::move(v)) {}
  std::variant<Embedding, StarPack> v_;
};

// Greedy BFS-order tree embedding: the root goes on host 0 and every child
// on the smallest unused red neighbor of its parent's image; a parent image
// with no unused red neighbor has at least k unused blue neighbors, which
// become the blue star.  Requires a tree and col.order >= |T| + k - 1.
EmbedResult embed_tree(const TwoColoring& col, const Graph& tree, int k);

// Embeds G by deleting vertex u first: host w = vertex 0 either has blue
// degree >= k (blue star) or red degree >= col.order - k, and G - u is
// embedded recursively inside w's red neighborhood (forests are padded to a
// tree; a connected remainder goes through the sparse embedder), then u is
// placed on w.  Requires col.order >= k plus the recursive order (|G|-1+k-1
// for a forest remainder, |G|-1+2k-2 for a connected non-tree remainder).
EmbedResult embed_minus_vertex(const TwoColoring& col, const Graph& g, int u, int k);

// Sparse connected patterns, e(G) <= n(1 + 1/(2k+1)), on hosts of order
// >= n + 2k - 2.  Small patterns (n <= 2k) are trees or unicyclic and are
// handled directly; otherwise k low-degree vertices are peeled off, the
// core is embedded recursively (dropping one non-bridge edge and moving
// into a red neighborhood when the peeled core exceeds its own edge
// budget), and the peeled vertices are re-attached in reverse order, each
// failure surfacing the blue star the counting argument exhibits.
EmbedResult embed_sparse(const TwoColoring& col, const Graph& g, int k);

// Spanning-size patterns: n >= 6k^3, e(G) <= n(1 + 1/(24k-12)), host order
// >= max{n, n+k-1-a'} where a' = min over v of the independence number of
// G - N[v].  Dispatches on the structure trichotomy: a long suspended path
// is shortened, embedded sparsely, and lengthened back; a large end-edge
// matching is completed through a red matching between supports and unused
// vertices; otherwise a high-degree-one center has k^2 pendant leaves
// re-attached through a host vertex of maximum red degree.
EmbedResult embed_spanning(const TwoColoring& col, const Graph& g, int k);

// Pattern versus t disjoint blue k-stars: n >= 28 t^2 k^3, e(G) <=
// n(1 + 1/(21tk-3k+6)), host order >= max{n, n+k-1-a'} + t - 1.  t = 1
// delegates to embed_spanning; t >= 2 runs the induction on t and the
// three-case analysis at scale (3t-1)k / 2tk-2, combining the inductive
// (t-1)-pack with a fresh star on every blue exit.
EmbedResult embed_vs_multistar(const TwoColoring& col, const Graph& g, int k, int t);

}  // namespace starspan
