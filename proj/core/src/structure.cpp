#include "starspan/structure.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "starspan/matching.hpp"

namespace starspan {
namespace {

long long ceil_div(long long a, long long b) {
  // b > 0; rounds toward positive infinity.
  long long q = a / b, r = a % b;
  return q + (r > 0 ? 1 : 0);
}

bool path_ok(const Graph& g, const std::vector<int>& path, int q) {
  const int n = g.order();
  if (static_cast<int>(path.size()) < q) return false;
  Bitset seen(n);
  for (int v : path) {
    if (v < 0 || v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.adjacent(path[i], path[i + 1])) return false;
  for (size_t i = 1; i + 1 < path.size(); ++i)
    if (g.degree(path[i]) != 2) return false;
  return true;
}

bool end_edges_ok(const Graph& g, const std::vector<std::pair<int, int>>& edges, int s) {
  const int n = g.order();
  if (static_cast<int>(edges.size()) != s) return false;
  Bitset seen(n);
  for (auto [leaf, sup] : edges) {
    if (leaf < 0 || leaf >= n || sup < 0 || sup >= n) return false;
    if (!g.adjacent(leaf, sup)) return false;
    if (g.degree(leaf) != 1) return false;
    if (seen.test(leaf) || seen.test(sup)) return false;
    seen.set(leaf);
    seen.set(sup);
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_suspended_path(const Graph& g, int q) {
  if (q < 3) throw std::invalid_argument("find_suspended_path: q must be at least 3");
  if (!g.connected()) throw std::invalid_argument("find_suspended_path: graph must be connected");
  const int n = g.order();
  if (n < q) return std::nullopt;

  bool all_degree_2 = n >= 3;
  for (int v = 0; v < n && all_degree_2; ++v) all_degree_2 = g.degree(v) == 2;
  if (all_degree_2) {
    // The whole graph is a cycle; walk it once.
    std::vector<int> path{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(path.size()) < n) {
      auto nb = g.neighbor_list(cur);
      int nxt = (nb[0] != prev) ? nb[0] : nb[1];
      path.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    if (!path_ok(g, path, q)) throw std::logic_error("find_suspended_path: cycle walk failed");
    return path;
  }

  std::vector<char> used(n, 0);
  for (int v = 0; v < n; ++v) {
    if (used[v] || g.degree(v) != 2) continue;
    std::deque<int> run{v};
    used[v] = 1;
    auto nb = g.neighbor_list(v);
    int anchor_left, anchor_right;
    {
      int prev = v, cur = nb[0];
      while (g.degree(cur) == 2) {
        run.push_front(cur);
        used[cur] = 1;
        auto nn = g.neighbor_list(cur);
        int nxt = (nn[0] != prev) ? nn[0] : nn[1];
        prev = cur;
        cur = nxt;
      }
      anchor_left = cur;
    }
    {
      int prev = v, cur = nb[1];
      while (g.degree(cur) == 2) {
        run.push_back(cur);
        used[cur] = 1;
        auto nn = g.neighbor_list(cur);
        int nxt = (nn[0] != prev) ? nn[0] : nn[1];
        prev = cur;
        cur = nxt;
      }
      anchor_right = cur;
    }
    std::vector<int> cand;
    cand.push_back(anchor_left);
    cand.insert(cand.end(), run.begin(), run.end());
    if (anchor_left != anchor_right) cand.push_back(anchor_right);
    if (static_cast<int>(cand.size()) >= q) {
      if (!path_ok(g, cand, q)) throw std::logic_error("find_suspended_path: candidate failed");
      return cand;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::pair<int, int>>> find_end_edge_matching(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("find_end_edge_matching: s must be at least 1");
  if (!g.connected()) throw std::invalid_argument("find_end_edge_matching: graph must be connected");
  const int n = g.order();

  std::vector<std::pair<int, int>> picked;
  Bitset used(n);
  for (int v = 0; v < n && static_cast<int>(picked.size()) < s; ++v) {
    if (g.degree(v) != 1 || used.test(v)) continue;
    int sup = g.neighbor_list(v)[0];
    if (used.test(sup)) continue;
    picked.emplace_back(v, sup);
    used.set(v);
    used.set(sup);
  }

  if (static_cast<int>(picked.size()) < s) {
    // Exact matching between degree-1 vertices and their supports.
    std::vector<int> leaves, sups;
    std::vector<int> sup_index(n, -1);
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != 1) continue;
      leaves.push_back(v);
      int u = g.neighbor_list(v)[0];
      if (sup_index[u] < 0) {
        sup_index[u] = static_cast<int>(sups.size());
        sups.push_back(u);
      }
    }
    std::vector<Bitset> adj(leaves.size(), Bitset(sups.size()));
    for (size_t i = 0; i < leaves.size(); ++i)
      adj[i].set(sup_index[g.neighbor_list(leaves[i])[0]]);
    auto m = maximum_bipartite_matching(adj, static_cast<int>(sups.size()));
    picked.clear();
    Bitset taken(n);
    for (size_t i = 0; i < leaves.size() && static_cast<int>(picked.size()) < s; ++i) {
      if (m.match_x[i] < 0) continue;
      int leaf = leaves[i], sup = sups[m.match_x[i]];
      if (taken.test(leaf) || taken.test(sup)) continue;
      picked.emplace_back(leaf, sup);
      taken.set(leaf);
      taken.set(sup);
    }
  }

  if (static_cast<int>(picked.size()) < s) return std::nullopt;
  picked.resize(s);
  if (!end_edges_ok(g, picked, s))
    throw std::logic_error("find_end_edge_matching: selected edges failed verification");
  return picked;
}

SparsityCheck sparsity_check(const Graph& g, int k, int t) {
  if (k < 1) throw std::invalid_argument("sparsity_check: k must be at least 1");
  if (t < 1) throw std::invalid_argument("sparsity_check: t must be at least 1");
  if (g.order() < 1) throw std::invalid_argument("sparsity_check: graph must be nonempty");
  const long long n = g.order(), e = g.size();
  SparsityCheck out;
  {
    const long long d = 24LL * k - 12;
    out.star_ok = e * d <= n * (d + 1);
  }
  {
    const long long d = 21LL * t * k - 3LL * k + 6;
    out.multistar_ok = e * d <= n * (d + 1);
  }
  {
    const long long d = 2LL * k + 1;
    out.sparse_embed_ok = e * d <= n * (d + 1);
  }
  return out;
}

bool caro_wei_check(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("caro_wei_check: k must be at least 2");
  if (!g.connected()) throw std::invalid_argument("caro_wei_check: graph must be connected");
  const long long n = g.order(), e = g.size(), dmax = g.max_degree();
  const long long d = 24LL * k - 12;
  if (e * d > n * (d + 1)) return false;
  if (dmax * d >= n * (d - 1)) return false;
  return n >= 120LL * k * k - 180LL * k + 60;
}

int count_low_degree(const Graph& g) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) <= 2) ++c;
  return c;
}

TrichotomyCertificate trichotomy(const Graph& g, int q, int s) {
  if (q < 3) throw std::invalid_argument("trichotomy: q must be at least 3");
  if (s < 2) throw std::invalid_argument("trichotomy: s must be at least 2");
  if (!g.connected()) throw std::invalid_argument("trichotomy: graph must be connected");
  const int n = g.order();
  if (n < q)
    throw std::invalid_argument("trichotomy: graph order must be at least q");

  TrichotomyCertificate cert;
  cert.q = q;
  cert.s = s;
  cert.ell = g.size() - n;
  cert.gamma = (q - 2LL) * (2LL * s + 3 * cert.ell - 2) + 1;

  if (auto p = find_suspended_path(g, q)) {
    cert.kind = TrichotomyKind::SuspendedPath;
    cert.path = std::move(*p);
    if (!verify_trichotomy(g, cert))
      throw std::logic_error("trichotomy: suspended-path certificate failed verification");
    return cert;
  }
  if (auto m = find_end_edge_matching(g, s)) {
    cert.kind = TrichotomyKind::EndEdgeMatching;
    cert.edges = std::move(*m);
    if (!verify_trichotomy(g, cert))
      throw std::logic_error("trichotomy: end-edge certificate failed verification");
    return cert;
  }

  cert.kind = TrichotomyKind::BoundedCoreStar;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 2) cert.core_vertices.push_back(v);
  int best_cnt = -1;
  for (int v = 0; v < n; ++v) {
    int c = 0;
    for (int u : g.neighbor_list(v))
      if (g.degree(u) == 1) ++c;
    if (c > best_cnt) {
      best_cnt = c;
      cert.star_center = v;
    }
  }
  for (int u : g.neighbor_list(cert.star_center))
    if (g.degree(u) == 1) cert.star_leaves.push_back(u);

  if (!verify_trichotomy(g, cert)) {
    if (2LL * s + 3 * cert.ell - 2 <= 0) {
      std::ostringstream msg;
      msg << "trichotomy: core bound is vacuous at s = " << s << ", ell = " << cert.ell
          << " (gamma = " << cert.gamma
          << " < 1; the only graphs reaching this branch are stars, whose single core vertex "
             "already exceeds it)";
      throw std::domain_error(msg.str());
    }
    throw std::logic_error("trichotomy: core-star certificate failed verification");
  }
  return cert;
}

bool verify_trichotomy(const Graph& g, const TrichotomyCertificate& cert) {
  const int n = g.order();
  if (cert.q < 3 || cert.s < 2) return false;
  if (cert.ell != g.size() - n) return false;
  if (cert.gamma != (cert.q - 2LL) * (2LL * cert.s + 3 * cert.ell - 2) + 1) return false;

  switch (cert.kind) {
    case TrichotomyKind::SuspendedPath:
      return path_ok(g, cert.path, cert.q);
    case TrichotomyKind::EndEdgeMatching:
      return end_edges_ok(g, cert.edges, cert.s);
    case TrichotomyKind::BoundedCoreStar: {
      std::vector<int> core;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 2) core.push_back(v);
      if (core != cert.core_vertices) return false;
      if (static_cast<long long>(core.size()) > cert.gamma) return false;
      if (cert.star_center < 0 || cert.star_center >= n) return false;
      Bitset seen(n);
      for (int u : cert.star_leaves) {
        if (u < 0 || u >= n || seen.test(u)) return false;
        seen.set(u);
        if (!g.adjacent(cert.star_center, u) || g.degree(u) != 1) return false;
      }
      long long need = ceil_div(n - cert.gamma, cert.s - 1);
      return static_cast<long long>(cert.star_leaves.size()) >= need;
    }
  }
  return false;
}

namespace {

struct RedState {
  Graph g;
  std::vector<int> to_orig;
};

// One reduction on the current graph; returns the step in original labels,
// or nullopt when no vertex of degree <= 2 exists.
std::optional<ReductionStep> step_once(RedState& st) {
  const Graph& g = st.g;
  const int n = g.order();
  if (n < 2) return std::nullopt;

  int pick = -1;
  ReductionKind kind = ReductionKind::Degree1;
  for (int v = 0; v < n && pick < 0; ++v)
    if (g.degree(v) == 1) pick = v;
  if (pick < 0) {
    auto cut = g.cut_vertex_flags();
    for (int v = 0; v < n && pick < 0; ++v)
      if (g.degree(v) == 2 && !cut[v]) {
        pick = v;
        kind = ReductionKind::Degree2NonCut;
      }
    for (int v = 0; v < n && pick < 0; ++v)
      if (g.degree(v) == 2 && cut[v]) {
        pick = v;
        kind = ReductionKind::Degree2Cut;
      }
  }
  if (pick < 0) return std::nullopt;

  ReductionStep step;
  step.kind = kind;
  step.removed_vertex = st.to_orig[pick];
  auto nbrs = g.neighbor_list(pick);
  for (int u : nbrs) step.neighbors.push_back(st.to_orig[u]);

  Graph g2 = g;
  if (kind == ReductionKind::Degree2Cut) {
    g2 = g2.with_edge(nbrs[0], nbrs[1]);
    step.added_edge = {std::min(step.neighbors[0], step.neighbors[1]),
                       std::max(step.neighbors[0], step.neighbors[1])};
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (v != pick) keep.push_back(v);
  auto sub = induced_subgraph(g2, keep);
  std::vector<int> orig2;
  for (int v : sub.to_original) orig2.push_back(st.to_orig[v]);

  if (!sub.graph.connected())
    throw std::logic_error("reduction: result unexpectedly disconnected");
  if (sub.graph.size() > g.size() - 1)
    throw std::logic_error("reduction: edge count did not decrease");

  st.g = std::move(sub.graph);
  st.to_orig = std::move(orig2);
  return step;
}

std::vector<int> identity_labels(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

std::pair<Graph, ReductionStep> reduce_once(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("reduce_once: graph must be connected");
  if (g.order() < 2) throw std::invalid_argument("reduce_once: graph must have at least 2 vertices");
  RedState st{g, identity_labels(g.order())};
  auto step = step_once(st);
  if (!step) throw std::invalid_argument("reduce_once: no vertex of degree <= 2 exists");
  return {std::move(st.g), std::move(*step)};
}

std::pair<Graph, std::vector<ReductionStep>> reduce_k(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("reduce_k: k must be at least 1");
  if (!g.connected()) throw std::invalid_argument("reduce_k: graph must be connected");
  RedState st{g, identity_labels(g.order())};
  std::vector<ReductionStep> trace;
  for (int i = 0; i < k; ++i) {
    auto step = step_once(st);
    if (!step) {
      std::ostringstream msg;
      msg << "reduce_k: stalled after " << i << " of " << k
          << " steps: no vertex of degree <= 2 remains";
      throw ReductionStall(msg.str(), std::move(st.g), std::move(trace));
    }
    trace.push_back(std::move(*step));
  }
  return {std::move(st.g), std::move(trace)};
}

Graph replay_reduction(const Graph& g, const std::vector<ReductionStep>& trace) {
  Graph cur = g;
  std::vector<int> to_orig = identity_labels(g.order());
  for (size_t i = 0; i < trace.size(); ++i) {
    const auto& step = trace[i];
    auto fail = [&](const std::string& why) {
      std::ostringstream msg;
      msg << "replay_reduction: step " << i << ": " << why;
      throw std::invalid_argument(msg.str());
    };
    auto it = std::lower_bound(to_orig.begin(), to_orig.end(), step.removed_vertex);
    if (it == to_orig.end() || *it != step.removed_vertex) fail("removed vertex not present");
    int v = static_cast<int>(it - to_orig.begin());
    std::vector<int> nbrs;
    for (int u : cur.neighbor_list(v)) nbrs.push_back(to_orig[u]);
    std::vector<int> want = step.neighbors;
    std::sort(want.begin(), want.end());
    if (nbrs != want) fail("recorded neighbors do not match the graph");
    size_t expect_nbrs = step.kind == ReductionKind::Degree1 ? 1 : 2;
    if (step.neighbors.size() != expect_nbrs) fail("neighbor count does not match step kind");
    if (step.kind == ReductionKind::Degree2Cut) {
      if (!step.added_edge) fail("cut-vertex step is missing its added edge");
      if (std::min(step.added_edge->first, step.added_edge->second) != want[0] ||
          std::max(step.added_edge->first, step.added_edge->second) != want[1])
        fail("added edge does not join the removed vertex's neighbors");
    } else if (step.added_edge) {
      fail("only cut-vertex steps may add an edge");
    }

    Graph g2 = cur;
    if (step.kind == ReductionKind::Degree2Cut) {
      auto jt = std::lower_bound(to_orig.begin(), to_orig.end(), want[0]);
      auto kt = std::lower_bound(to_orig.begin(), to_orig.end(), want[1]);
      int a = static_cast<int>(jt - to_orig.begin());
      int b = static_cast<int>(kt - to_orig.begin());
      if (cur.adjacent(a, b)) fail("added edge already present");
      g2 = g2.with_edge(a, b);
    }
    std::vector<int> keep;
    for (int u = 0; u < g2.order(); ++u)
      if (u != v) keep.push_back(u);
    auto sub = induced_subgraph(g2, keep);
    std::vector<int> orig2;
    for (int u : sub.to_original) orig2.push_back(to_orig[u]);
    cur = std::move(sub.graph);
    to_orig = std::move(orig2);
  }
  return cur;
}

Graph replay_reduction_backward(const Graph& reduced, const std::vector<ReductionStep>& trace,
                                int original_order) {
  const int n = original_order;
  if (n < reduced.order() + static_cast<int>(trace.size()))
    throw std::invalid_argument("replay_reduction_backward: original order too small");

  Bitset removed(n);
  for (const auto& step : trace) {
    if (step.removed_vertex < 0 || step.removed_vertex >= n || removed.test(step.removed_vertex))
      throw std::invalid_argument("replay_reduction_backward: bad removed-vertex list");
    removed.set(step.removed_vertex);
  }
  std::vector<int> survivors;
  for (int v = 0; v < n; ++v)
    if (!removed.test(v)) survivors.push_back(v);
  if (static_cast<int>(survivors.size()) != reduced.order())
    throw std::invalid_argument("replay_reduction_backward: order mismatch with trace");

  std::vector<Bitset> adj(n, Bitset(n));
  Bitset present(n);
  for (int v : survivors) present.set(v);
  for (auto [u, v] : reduced.edge_list()) {
    int a = survivors[u], b = survivors[v];
    adj[a].set(b);
    adj[b].set(a);
  }

  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    const auto& step = *it;
    if (step.added_edge) {
      auto [a, b] = *step.added_edge;
      if (!present.test(a) || !present.test(b) || !adj[a].test(b))
        throw std::invalid_argument("replay_reduction_backward: added edge missing at undo time");
      adj[a].reset(b);
      adj[b].reset(a);
    }
    int v = step.removed_vertex;
    present.set(v);
    for (int u : step.neighbors) {
      if (!present.test(u) || adj[v].test(u))
        throw std::invalid_argument("replay_reduction_backward: neighbor unavailable at undo time");
      adj[v].set(u);
      adj[u].set(v);
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (auto w = adj[u].find_next(u); w != Bitset::npos; w = adj[u].find_next(w))
      edges.emplace_back(u, static_cast<int>(w));
  return Graph::from_edges(n, edges);
}

}  // namespace starspan
