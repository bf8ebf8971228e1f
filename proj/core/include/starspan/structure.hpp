#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starspan/graph.hpp"

namespace starspan {

// ---- structural searches ----------------------------------------------

// A path on >= q vertices whose internal vertices all have degree exactly 2
// in g; endpoint degrees are unconstrained.  Deterministic: maximal
// degree-2 runs are scanned in vertex-index order.  Verified on return.
std::optional<std::vector<int>> find_suspended_path(const Graph& g, int q);

// s pairwise vertex-disjoint edges, each incident to a degree-1 vertex.
// Pairs are (leaf, support) with the degree-1 endpoint first.  Greedy over
// degree-1 vertices in index order with support dedup, then an exact
// bipartite matching between leaves and supports if greedy falls short.
std::optional<std::vector<std::pair<int, int>>> find_end_edge_matching(const Graph& g, int s);

// ---- sparsity and degree conditions ------------------------------------

struct SparsityCheck {
  bool star_ok = false;          // e <= n * (1 + 1/(24k-12))
  bool multistar_ok = false;     // e <= n * (1 + 1/(21tk-3k+6))
  bool sparse_embed_ok = false;  // e <= n * (1 + 1/(2k+1))
};

// Exact integer comparisons; no floating point.
SparsityCheck sparsity_check(const Graph& g, int k, int t);

// Sufficient condition for a large local independence deficit bound:
// e <= n(1+1/(24k-12)), max degree < n(1-1/(24k-12)), n >= 120k^2-180k+60.
// When true, alpha_prime(g) >= k-1.
bool caro_wei_check(const Graph& g, int k);

// Number of vertices of degree <= 2.
int count_low_degree(const Graph& g);

// ---- structure trichotomy ----------------------------------------------

enum class TrichotomyKind { SuspendedPath, EndEdgeMatching, BoundedCoreStar };

// Every connected graph on >= q vertices either has a suspended path of
// order q, or s disjoint end-edges, or (when 2s+3*ell-2 > 0) a degree->=2
// core of at most gamma = (q-2)(2s+3*ell-2)+1 vertices together with a
// vertex carrying at least ceil((n-gamma)/(s-1)) degree-1 neighbors, where
// ell = e - n.
struct TrichotomyCertificate {
  TrichotomyKind kind = TrichotomyKind::SuspendedPath;
  int q = 0;
  int s = 0;
  long long ell = 0;
  long long gamma = 0;

  std::vector<int> path;                      // SuspendedPath
  std::vector<std::pair<int, int>> edges;     // EndEdgeMatching, (leaf, support)
  std::vector<int> core_vertices;             // BoundedCoreStar: all degree->=2 vertices
  int star_center = -1;                       // BoundedCoreStar
  std::vector<int> star_leaves;               // BoundedCoreStar: degree-1 neighbors
};

// Priority: SuspendedPath, then EndEdgeMatching, then a verified
// BoundedCoreStar whose center maximizes its degree-1 neighbor count.
// Throws std::domain_error when s == 2 and ell == -1 and neither of the
// first two structures exists: the core bound is vacuous there (gamma < 1,
// satisfied by no graph; the only such graphs are stars).
TrichotomyCertificate trichotomy(const Graph& g, int q, int s);

// Re-checks the certificate's variant invariants against g.
bool verify_trichotomy(const Graph& g, const TrichotomyCertificate& cert);

// ---- low-degree reduction ----------------------------------------------

enum class ReductionKind { Degree1, Degree2NonCut, Degree2Cut };

struct ReductionStep {
  ReductionKind kind = ReductionKind::Degree1;
  int removed_vertex = -1;          // label in the ORIGINAL graph
  std::vector<int> neighbors;       // 1 or 2 original labels
  std::optional<std::pair<int, int>> added_edge;  // Degree2Cut only
};

class ReductionStall : public std::runtime_error {
public:
  ReductionStall(const std::string& msg, Graph partial, std::vector<ReductionStep> trace)
      : std::runtime_error(msg), partial_(std::move(partial)), trace_(std::move(trace)) {}
  const Graph& partial_graph() const { return partial_; }
  const std::vector<ReductionStep>& partial_trace() const { return trace_; }

private:
  Graph partial_;
  std::vector<ReductionStep> trace_;
};

// Removes one vertex of degree <= 2; a cut vertex of degree 2 additionally
// has an edge added between its two (never adjacent) neighbors.  Selection
// priority: degree-1, then non-cut degree-2, then cut degree-2, smallest
// index within each class.  Result stays connected and loses >= 1 edge.
std::pair<Graph, ReductionStep> reduce_once(const Graph& g);

// k chained reductions; the trace records original labels throughout.
// Throws ReductionStall (with partial results) if no low-degree vertex
// exists before k steps complete.
std::pair<Graph, std::vector<ReductionStep>> reduce_k(const Graph& g, int k);

// Forward-replays a trace on g, validating each step against the recorded
// kind, neighbors, and added edge; returns the reduced graph.
Graph replay_reduction(const Graph& g, const std::vector<ReductionStep>& trace);

// Rebuilds the original graph from the reduced graph and the trace.
Graph replay_reduction_backward(const Graph& reduced, const std::vector<ReductionStep>& trace,
                                int original_order);

}  // namespace starspan
