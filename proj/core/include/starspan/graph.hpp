#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <utility>
#include <vector>

namespace starspan {

using Bitset = boost::dynamic_bitset<>;

// Immutable simple undirected graph on vertices 0..n-1.
// Adjacency is stored as one bitset row per vertex; degrees are cached.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : adj_(n, Bitset(n)), deg_(n, 0) {}

  // Validates: endpoints in range, no self-loops, no duplicates.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  long long size() const { return edge_count_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return deg_[v]; }
  const Bitset& row(int v) const { return adj_[v]; }

  int min_degree() const;
  int max_degree() const;
  std::vector<int> neighbor_list(int v) const;
  std::vector<std::pair<int, int>> edge_list() const;  // u < v, lexicographic

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool connected() const;  // vacuously true for order <= 1
  std::vector<int> component_ids() const;
  int component_count() const;
  bool is_tree() const { return order() > 0 && edge_count_ == order() - 1 && connected(); }
  bool is_forest() const;

  std::vector<bool> cut_vertex_flags() const;
  std::vector<std::pair<int, int>> bridge_list() const;  // u < v, lexicographic

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
  std::vector<Bitset> adj_;
  std::vector<int> deg_;
  long long edge_count_ = 0;

  void add_edge_unchecked(int u, int v);
};

Graph complement(const Graph& g);

// Induced subgraph together with its new -> original vertex relabeling.
struct VertexMap {
  Graph graph;
  std::vector<int> to_original;
};

// Keeps vertices in the order given by `keep` (must be distinct, in range).
VertexMap induced_subgraph(const Graph& g, const std::vector<int>& keep);
VertexMap induced_subgraph(const Graph& g, const Bitset& keep);
VertexMap delete_vertices(const Graph& g, const std::vector<int>& drop);

// G - N[v]: deletes v and all its neighbors.
VertexMap local_deleted_graph(const Graph& g, int v);

std::vector<int> bits(const Bitset& b);  // set positions, ascending
Bitset mask_of(int n, const std::vector<int>& vs);

}  // namespace starspan
