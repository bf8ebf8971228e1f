#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "starspan/coloring.hpp"
#include "starspan/graph.hpp"

namespace starspan {

// ---- Ramsey bound formulas ----------------------------------------------

// Exact bound arithmetic for the star and multistar Ramsey numbers of a
// connected pattern with n vertices and local independence deficit
// alpha_prime = min over v of the independence number of G - N[v].
struct BoundReport {
  long long n = 0;
  long long k = 0;
  long long t = 0;
  long long alpha_prime = 0;
  int beta = 0;                  // 0 iff k divides n + k - 2 - alpha_prime
  long long lower = 0;           // max{n, n + k - 1 - alpha_prime - beta}
  long long upper = 0;           // max{n, n + k - 1 - alpha_prime}
  long long multistar_upper = 0; // upper + t - 1
};

// n, k, t >= 1, alpha_prime >= 0.  Pure integer arithmetic; lower <= upper
// always, and alpha_prime >= k-1 collapses both to n.
BoundReport bound_report(long long n, long long k, long long t, long long alpha_prime);

// ---- lower-bound colorings ----------------------------------------------

// A coloring whose structure is a disjoint union of cliques on one side:
//   - cliques_are_red = false: the BLUE graph is exactly the listed clique
//     union (red = its complement).  Used by the star lower bound.
//   - cliques_are_red = true: the RED graph is the listed clique union
//     (blue = complete multipartite between the parts).  Used by the
//     clique and multistar lower bounds.
// Vertices are laid out clique by clique, consecutively, in list order.
struct ExtremalConstruction {
  TwoColoring coloring;
  std::vector<int> clique_sizes;
  bool cliques_are_red = false;
};

// Witness coloring for r(G, K_{1,k}) > n + k - 2 - alpha_prime - beta:
// writing M = n + k - 2 - alpha_prime - beta as tk + s with 0 < s <= k, the
// blue graph is (t-k+1+s) K_k  u  (k-s) K_{k-1} on M vertices.  Every blue
// degree is <= k-1, so no blue K_{1,k}; a counting argument over the red
// independent sets rules out a red copy of any qualifying pattern.
// Requires k >= 2, 0 <= alpha_prime <= k-1, M >= 1, and multiplicity
// t-k+1+s >= 0 (violations throw std::invalid_argument naming the failed
// inequality; large n always satisfies them).
ExtremalConstruction build_star_lower_construction(long long n, int k, int alpha_prime);

// All-red K_{n-1}: too few vertices for any connected n-vertex pattern and
// no blue edge at all.  Requires n >= 2.
ExtremalConstruction build_clique_construction(long long n);

// Red K_{n-1} u K_{t-1} with complete bipartite blue in between: no red
// component can host a connected n-vertex pattern, and every blue star uses
// a vertex of the (t-1)-side, capping disjoint blue star packings at t-1.
// Requires n >= 2, t >= 1 (t = 1 degenerates to the clique construction).
ExtremalConstruction build_multistar_construction(long long n, int t);

// ---- validation ----------------------------------------------------------

struct ConstructionValidation {
  // The coloring's clique side is exactly the described clique union.
  bool structure_matches = false;
  // Greedy packing cannot assemble t disjoint blue k-stars.
  bool greedy_pack_fails = false;
  // Exhaustive packing bound (<= t-1), run when the coloring order is
  // within both exhaustive_limit and the exact-search cap of 20.
  std::optional<bool> exhaustive_pack_fails;
  // Exhaustive red-subgraph search for the pattern, run when the pattern
  // order is within exhaustive_limit.
  std::optional<bool> red_copy_absent;
  // How the red side was judged when the search was skipped.
  std::string red_note;

  bool passed() const {
    return structure_matches && greedy_pack_fails && exhaustive_pack_fails.value_or(true) &&
           red_copy_absent.value_or(true);
  }
};

// Checks a construction against a candidate pattern: structure match and
// blue-packing failure always run; the exhaustive searches run only below
// the order limits, otherwise the report cites the counting argument
// instead of silently assuming success.
ConstructionValidation validate_construction(const ExtremalConstruction& c, const Graph& pattern,
                                             int k, int t, int exhaustive_limit = 10);

// ---- order/size threshold functions --------------------------------------

// f(k,c) = (c/24k) (12k-12+24k/c) (2k^3+13k^2-40k+25): the exact order
// threshold paired with edge bound n(1 + 1/(12k-12+24k/c)) for the
// single-star guarantee.  Product form and expanded polynomial form.
mpq_class threshold_f(int k, const mpq_class& c);
mpq_class threshold_f_expanded(int k, const mpq_class& c);

// h(k,t,c) = (c/24tk) (9tk-3k-6+24tk/c) (2tk^3+14t^2k^2-10tk^2-3k^2-25tk
// +15k+7): the multistar analogue, paired with edge bound
// n(1 + 1/(9tk-3k-6+24tk/c)).
mpq_class threshold_h(int k, int t, const mpq_class& c);
mpq_class threshold_h_expanded(int k, int t, const mpq_class& c);

struct ThresholdReport {
  mpq_class f;
  mpq_class h;
  long long star_order_min = 0;            // simplified c=2 bound 6k^3
  long long multistar_order_min = 0;       // simplified c=2 bound 28 t^2 k^3
  mpq_class star_edge_denominator;         // 12k - 12 + 24k/c
  mpq_class multistar_edge_denominator;    // 9tk - 3k - 6 + 24tk/c
};

// Evaluates both threshold functions in exact rationals (product and
// expanded forms are cross-checked; disagreement would be an internal
// error) together with the simplified integer minima and the edge-bound
// denominators.  Requires k >= 2, t >= 1, c > 0.
ThresholdReport thresholds(int k, int t, const mpq_class& c);

}  // namespace starspan
