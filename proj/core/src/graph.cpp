#include "starspan/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace starspan {

void Graph::add_edge_unchecked(int u, int v) {
  adj_[u].set(v);
  adj_[v].set(u);
  ++deg_[u];
  ++deg_[v];
  ++edge_count_;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (g.adj_[u].test(v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge_unchecked(u, v);
  }
  return g;
}

int Graph::min_degree() const {
  if (order() == 0) return 0;
  return *std::min_element(deg_.begin(), deg_.end());
}

int Graph::max_degree() const {
  if (order() == 0) return 0;
  return *std::max_element(deg_.begin(), deg_.end());
}

std::vector<int> Graph::neighbor_list(int v) const { return bits(adj_[v]); }

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < order(); ++u)
    for (auto w = adj_[u].find_next(u); w != Bitset::npos; w = adj_[u].find_next(w))
      out.emplace_back(u, static_cast<int>(w));
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || u >= order() || v < 0 || v >= order() || u == v || adj_[u].test(v))
    throw std::invalid_argument("with_edge: invalid or existing edge");
  Graph g = *this;
  g.add_edge_unchecked(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || u >= order() || v < 0 || v >= order() || !adj_[u].test(v))
    throw std::invalid_argument("without_edge: no such edge");
  Graph g = *this;
  g.adj_[u].reset(v);
  g.adj_[v].reset(u);
  --g.deg_[u];
  --g.deg_[v];
  --g.edge_count_;
  return g;
}

std::vector<int> Graph::component_ids() const {
  int n = order();
  std::vector<int> comp(n, -1);
  std::vector<int> stack;
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto w = adj_[v].find_first(); w != Bitset::npos; w = adj_[v].find_next(w)) {
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(static_cast<int>(w));
        }
      }
    }
    ++c;
  }
  return comp;
}

int Graph::component_count() const {
  auto ids = component_ids();
  return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

bool Graph::connected() const { return component_count() <= 1; }

bool Graph::is_forest() const { return edge_count_ == order() - component_count(); }

std::vector<bool> Graph::cut_vertex_flags() const {
  int n = order();
  std::vector<bool> cut(n, false);
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<Bitset::size_type> it(n, 0);
  int timer = 0;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    it[root] = adj_[root].find_first();
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      if (it[v] == Bitset::npos) {
        stack.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) cut[p] = true;
        }
        continue;
      }
      int w = static_cast<int>(it[v]);
      it[v] = adj_[v].find_next(it[v]);
      if (disc[w] == -1) {
        parent[w] = v;
        if (v == root) ++root_children;
        disc[w] = low[w] = timer++;
        it[w] = adj_[w].find_first();
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
    cut[root] = root_children >= 2;
  }
  return cut;
}

std::vector<std::pair<int, int>> Graph::bridge_list() const {
  int n = order();
  std::vector<std::pair<int, int>> out;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<Bitset::size_type> it(n, 0);
  int timer = 0;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    it[root] = adj_[root].find_first();
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      if (it[v] == Bitset::npos) {
        stack.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.emplace_back(std::min(p, v), std::max(p, v));
        }
        continue;
      }
      int w = static_cast<int>(it[v]);
      it[v] = adj_[v].find_next(it[v]);
      if (disc[w] == -1) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        it[w] = adj_[w].find_first();
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

VertexMap induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  int n = g.order();
  int s = static_cast<int>(keep.size());
  std::vector<int> new_index(n, -1);
  for (int i = 0; i < s; ++i) {
    int v = keep[i];
    if (v < 0 || v >= n) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (new_index[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    new_index[v] = i;
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s; ++i) {
    const Bitset& r = g.row(keep[i]);
    for (auto w = r.find_first(); w != Bitset::npos; w = r.find_next(w)) {
      int j = new_index[w];
      if (j > i) edges.emplace_back(i, j);
      // j < i handled from the other side; j == -1 dropped
    }
  }
  return VertexMap{Graph::from_edges(s, edges), keep};
}

VertexMap induced_subgraph(const Graph& g, const Bitset& keep) {
  return induced_subgraph(g, bits(keep));
}

VertexMap delete_vertices(const Graph& g, const std::vector<int>& drop) {
  Bitset keep(g.order());
  keep.set();
  for (int v : drop) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertices: vertex out of range");
    keep.reset(v);
  }
  return induced_subgraph(g, bits(keep));
}

VertexMap local_deleted_graph(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("local_deleted_graph: vertex out of range");
  Bitset keep = g.row(v);
  keep.set(v);
  keep.flip();
  return induced_subgraph(g, bits(keep));
}

std::vector<int> bits(const Bitset& b) {
  std::vector<int> out;
  out.reserve(b.count());
  for (auto w = b.find_first(); w != Bitset::npos; w = b.find_next(w))
    out.push_back(static_cast<int>(w));
  return out;
}

Bitset mask_of(int n, const std::vector<int>& vs) {
  Bitset m(n);
  for (int v : vs) m.set(v);
  return m;
}

}  // namespace starspan
