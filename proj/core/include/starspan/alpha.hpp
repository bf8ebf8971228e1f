#pragma once

#include <vector>

#include "starspan/graph.hpp"

namespace starspan {

// Exact maximum-independent-set computations.  Branch and bound on a
// maximum-degree vertex with a matching-based upper bound; pendant and
// isolated vertices are reduced away exactly, and an all-degree-2 residue
// (disjoint cycles) is solved in closed form.  Fully deterministic.
int independence_number(const Graph& g);
std::vector<int> maximum_independent_set(const Graph& g);

// Same computations restricted to the vertices set in `alive` (a bitset of
// size g.order()); avoids building induced subgraphs in inner loops.
int independence_number_within(const Graph& g, const Bitset& alive);
std::vector<int> maximum_independent_set_within(const Graph& g, const Bitset& alive);

struct AlphaPrimeReport {
  int alpha_prime = 0;
  int witness_vertex = -1;           // smallest vertex attaining the minimum
  std::vector<int> per_vertex_alpha; // independence number of g minus the closed
                                     // neighborhood of each vertex
};

// min over v of the independence number of g - N[v].
AlphaPrimeReport alpha_prime(const Graph& g);

}  // namespace starspan
