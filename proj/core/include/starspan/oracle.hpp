#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starspan/graph.hpp"

namespace starspan {

// ---- isomorphism machinery ----------------------------------------------

// Canonical relabeling of g: color refinement with individualization,
// keeping the lexicographically smallest upper-triangle encoding over the
// refinement-compatible orderings; same-neighborhood vertices collapse to
// a single branch.  The result is a fixed representative of the
// isomorphism class: two graphs get equal canonical forms exactly when
// they are isomorphic.
Graph canonical_form(const Graph& g);

// graph6 string of canonical_form(g): equal iff the graphs are isomorphic.
std::string canonical_key(const Graph& g);

// Every isomorphism class on n vertices (max_degree < 0 means uncapped),
// as canonical forms sorted by key.  Generated by vertex extension with
// per-level deduplication; n is capped at 12.
std::vector<Graph> enumerate_graphs(int n, int max_degree = -1);

// Every tree on n vertices up to isomorphism, by leaf extension; n <= 14.
std::vector<Graph> enumerate_trees(int n);

// Every connected isomorphism class on n vertices with at most max_edges
// edges, by edge extension upward from the trees; ordered by edge count,
// then canonical key.  n is capped at 12.
std::vector<Graph> enumerate_connected_graphs(int n, long long max_edges);

// ---- containment and packing --------------------------------------------

// Injective edge-preserving map of pattern into host (subgraph, not
// induced), or absent.  Pattern vertices are matched in descending-degree
// order (ties by index) against ascending host candidates, so the first
// embedding found is deterministic.
std::optional<std::vector<int>> subgraph_contains(const Graph& host, const Graph& pattern);

// Exact maximum number of vertex-disjoint K_{1,k} subgraphs of g, by
// memoized recursion on the lowest free vertex.  Order capped at 20.
int max_star_packing(const Graph& g, int k);

// ---- exhaustive Ramsey search -------------------------------------------

// A coloring of K_order avoiding both targets: blue edges as stored, red
// edges the complement.
struct RamseyWitness {
  int order = 0;
  Graph blue;
};

struct RamseySearchStats {
  long long iso_classes_tested = 0;   // candidate blue graphs across all orders
  long long containment_checks = 0;   // red-side subgraph searches
  long long packing_rejections = 0;   // blue graphs discarded by the packing filter
};

struct RamseyResult {
  int value = -1;
  std::vector<RamseyWitness> witnesses;  // one per order < value, ascending
  RamseySearchStats stats;
  std::string certificate;  // covers the successful order
};

// Smallest N <= n_cap such that every red/blue coloring of K_N contains a
// red copy of g or a blue K_{1,k}.  Candidate blue graphs are exactly the
// graphs with max degree <= k-1, enumerated up to isomorphism; the red side
// is tested with subgraph_contains.  Throws when n_cap is exhausted.
RamseyResult exact_ramsey_star(const Graph& g, int k, int n_cap);

// Same with blue target t disjoint K_{1,k}: candidate blue graphs are all
// graphs whose exact maximum star packing is at most t-1.
RamseyResult exact_ramsey_multistar(const Graph& g, int k, int t, int n_cap);

// Re-checks one witness: no red copy of g (exhaustive) and blue star
// packing below t.
bool verify_ramsey_witness(const RamseyWitness& w, const Graph& g, int k, int t);

// ---- independent ground truths ------------------------------------------

// Exact independence number by plain include/exclude recursion over the
// vertex power set (only the remaining-count prune); order capped at 24.
// Kept deliberately separate from the main solver as its cross-check.
int alpha_bruteforce(const Graph& g);

// (n-1)(m-1)+1: the tree-versus-clique Ramsey value.
long long chvatal_value(long long n_tree, long long m_clique);

}  // namespace starspan
