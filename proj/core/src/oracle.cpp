#include "starspan/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "starspan/io.hpp"

namespace starspan {
namespace {

// Splits color classes by the multiset of neighbor colors until stable.
// New indices follow (old color, signature) order, so the refined partition
// depends only on the isomorphism type, never on vertex labels.
void refine_colors(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  if (n == 0) return;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      auto& key = sig[v];
      key.push_back(color[v]);
      const Bitset& row = g.row(v);
      for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
        key.push_back(color[static_cast<int>(u)]);
      std::sort(key.begin() + 1, key.end());
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int before = 1 + *std::max_element(color.begin(), color.end());
    int c = 0;
    std::vector<int> nc(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      nc[order[i]] = c;
    }
    color = std::move(nc);
    if (c + 1 == before) return;  // refinement only ever splits cells
  }
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;
  std::vector<int> best_label;
  long long leaves = 0;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  // Upper-triangle bits of the relabeled graph, column-major, packed
  // MSB-first: lexicographic order on these strings matches the graph6
  // body order.
  std::string key_for(const std::vector<int>& label) const {
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[label[v]] = v;
    std::string s;
    s.reserve(static_cast<size_t>(n) * (n - 1) / 16 + 1);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | (g.adjacent(at[i], at[j]) ? 1 : 0);
        if (++nbits == 8) {
          s.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    if (nbits > 0) s.push_back(static_cast<char>(acc << (8 - nbits)));
    return s;
  }

  void descend(std::vector<int> color) {
    refine_colors(g, color);
    int cells = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
    if (cells == n) {
      if (++leaves > 5'000'000)
        throw std::runtime_error("canonical_form: search exceeded its budget");
      std::string key = key_for(color);
      if (best_label.empty() || key < best) {
        best = std::move(key);
        best_label = std::move(color);
      }
      return;
    }

    // First cell with at least two members.
    std::vector<int> count(cells, 0);
    for (int v = 0; v < n; ++v) ++count[color[v]];
    int cell = 0;
    while (count[cell] < 2) ++cell;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (color[v] == cell) members.push_back(v);

    // Same-neighborhood vertices are swappable by a transposition
    // automorphism, so one representative per group suffices.
    std::vector<int> reps;
    for (int v : members) {
      bool twin = false;
      for (int u : reps) {
        Bitset ru = g.row(u), rv = g.row(v);
        ru.reset(v);
        rv.reset(u);
        if (ru == rv) {
          twin = true;
          break;
        }
      }
      if (!twin) reps.push_back(v);
    }

    for (int v : reps) {
      std::vector<int> child(n);
      for (int u = 0; u < n; ++u)
        child[u] = 2 * color[u] + (color[u] == cell && u != v ? 1 : 0);
      descend(child);
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return g;
  CanonSearch search(g);
  search.descend(std::vector<int>(n, 0));
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edge_list())
    edges.emplace_back(search.best_label[u], search.best_label[v]);
  return Graph::from_edges(n, edges);
}

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

std::vector<Graph> enumerate_graphs(int n, int max_degree) {
  if (n < 0) throw std::invalid_argument("enumerate_graphs: order must be nonnegative");
  if (n > 12) throw std::invalid_argument("enumerate_graphs: order above the supported scale");
  if (n == 0) return {Graph(0)};
  auto degree_ok = [max_degree](int d) { return max_degree < 0 || d <= max_degree; };

  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    const int base = m - 1;
    for (const Graph& g : level) {
      const auto base_edges = g.edge_list();
      for (unsigned mask = 0; mask < (1u << base); ++mask) {
        if (!degree_ok(__builtin_popcount(mask))) continue;
        bool ok = true;
        auto edges = base_edges;
        for (int u = 0; u < base && ok; ++u) {
          if (!(mask >> u & 1)) continue;
          if (!degree_ok(g.degree(u) + 1))
            ok = false;
          else
            edges.emplace_back(u, base);
        }
        if (!ok) continue;
        Graph c = canonical_form(Graph::from_edges(m, edges));
        std::string key = to_graph6(c);
        next.emplace(std::move(key), std::move(c));
      }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [key, g] : next) level.push_back(std::move(g));
    if (level.size() > 500000)
      throw std::runtime_error("enumerate_graphs: class count exceeded the supported scale");
  }
  return level;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: order must be positive");
  if (n > 14) throw std::invalid_argument("enumerate_trees: order above the supported scale");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level) {
      const auto base_edges = t.edge_list();
      for (int u = 0; u < m - 1; ++u) {
        auto edges = base_edges;
        edges.emplace_back(u, m - 1);
        Graph c = canonical_form(Graph::from_edges(m, edges));
        std::string key = to_graph6(c);
        next.emplace(std::move(key), std::move(c));
      }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [key, t] : next) level.push_back(std::move(t));
  }
  return level;
}

std::vector<Graph> enumerate_connected_graphs(int n, long long max_edges) {
  if (n < 1) throw std::invalid_argument("enumerate_connected_graphs: order must be positive");
  if (n > 12)
    throw std::invalid_argument("enumerate_connected_graphs: order above the supported scale");
  if (max_edges < n - 1) return {};

  std::vector<Graph> out;
  std::vector<Graph> level = enumerate_trees(n);
  out.insert(out.end(), level.begin(), level.end());
  const long long full = static_cast<long long>(n) * (n - 1) / 2;
  for (long long e = n - 1; e < std::min(max_edges, full); ++e) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          Graph c = canonical_form(g.with_edge(u, v));
          std::string key = to_graph6(c);
          next.emplace(std::move(key), std::move(c));
        }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [key, g] : next) level.push_back(std::move(g));
    out.insert(out.end(), level.begin(), level.end());
    if (out.size() > 500000)
      throw std::runtime_error(
          "enumerate_connected_graphs: class count exceeded the supported scale");
  }
  return out;
}

std::optional<std::vector<int>> subgraph_contains(const Graph& host, const Graph& pattern) {
  const int np = pattern.order(), nh = host.order();
  if (np == 0) return std::vector<int>{};
  if (np > nh || pattern.size() > host.size()) return std::nullopt;

  std::vector<int> order(np);
  for (int i = 0; i < np; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pattern.degree(a) != pattern.degree(b)) return pattern.degree(a) > pattern.degree(b);
    return a < b;
  });

  std::vector<int> phi(np, -1);
  Bitset used(nh);
  std::function<bool(int)> place = [&](int idx) -> bool {
    if (idx == np) return true;
    const int p = order[idx];
    Bitset cand(nh);
    cand.set();
    cand -= used;
    const Bitset& prow = pattern.row(p);
    for (auto q = prow.find_first(); q != Bitset::npos; q = prow.find_next(q))
      if (phi[static_cast<int>(q)] >= 0) cand &= host.row(phi[static_cast<int>(q)]);
    for (auto h = cand.find_first(); h != Bitset::npos; h = cand.find_next(h)) {
      const int hv = static_cast<int>(h);
      if (host.degree(hv) < pattern.degree(p)) continue;
      phi[p] = hv;
      used.set(hv);
      if (place(idx + 1)) return true;
      used.reset(hv);
      phi[p] = -1;
    }
    return false;
  };
  if (place(0)) return phi;
  return std::nullopt;
}

namespace {

// All k-subsets of the set bits of `mask`, passed to fn as submasks.
void for_each_k_subset(std::uint32_t mask, int k, std::uint32_t acc,
                       const std::function<void(std::uint32_t)>& fn) {
  if (k == 0) {
    fn(acc);
    return;
  }
  while (mask != 0) {
    std::uint32_t bit = mask & (0u - mask);
    mask ^= bit;
    if (__builtin_popcount(mask) < k - 1) return;
    for_each_k_subset(mask, k - 1, acc | bit, fn);
  }
}

}  // namespace

int max_star_packing(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("max_star_packing: k must be at least 1");
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("max_star_packing: order above the exact-search cap");
  if (n == 0) return 0;

  std::vector<std::uint32_t> row(n, 0);
  for (int v = 0; v < n; ++v) {
    const Bitset& r = g.row(v);
    for (auto u = r.find_first(); u != Bitset::npos; u = r.find_next(u))
      row[v] |= 1u << static_cast<int>(u);
  }

  std::map<std::uint32_t, int> memo;
  std::function<int(std::uint32_t)> solve = [&](std::uint32_t free) -> int {
    if (free == 0) return 0;
    auto it = memo.find(free);
    if (it != memo.end()) return it->second;
    const int v = __builtin_ctz(free);
    const std::uint32_t vbit = 1u << v;
    int best = solve(free ^ vbit);  // v stays out of the packing
    auto try_star = [&](std::uint32_t star) {
      int sub = 1 + solve(free & ~star);
      if (sub > best) best = sub;
    };
    // v as center
    for_each_k_subset(row[v] & free, k, vbit, try_star);
    // v as a leaf of a center u
    std::uint32_t centers = row[v] & free;
    while (centers != 0) {
      std::uint32_t ubit = centers & (0u - centers);
      centers ^= ubit;
      const int u = __builtin_ctz(ubit);
      for_each_k_subset(row[u] & free & ~vbit & ~ubit, k - 1, vbit | ubit, try_star);
    }
    memo.emplace(free, best);
    return best;
  };
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  return solve(all);
}

namespace {

RamseyResult ramsey_search(const Graph& g, int k, int t, int n_cap, bool capped_blue,
                           const char* name) {
  if (g.order() < 1) {
    throw std::invalid_argument(std::string(name) + ": pattern must be nonempty");
  }
  if (g.order() > 10)
    throw std::invalid_argument(std::string(name) + ": pattern above desk scale");
  if (k < 1) throw std::invalid_argument(std::string(name) + ": k must be at least 1");
  if (t < 1) throw std::invalid_argument(std::string(name) + ": t must be at least 1");
  if (n_cap < 1) throw std::invalid_argument(std::string(name) + ": order cap must be positive");
  const int hard_cap = capped_blue ? 12 : 8;
  if (n_cap > hard_cap)
    throw std::invalid_argument(std::string(name) + ": order cap above the supported scale");

  RamseyResult out;
  for (int N = 1; N <= n_cap; ++N) {
    if (N < g.order()) {
      // All-red K_N: too small for a red copy, and no blue edge at all.
      out.witnesses.push_back({N, Graph(N)});
      continue;
    }
    std::vector<Graph> classes = enumerate_graphs(N, capped_blue ? k - 1 : -1);
    const Graph* fail = nullptr;
    long long tested = 0;
    for (const Graph& blue : classes) {
      if (!capped_blue) {
        if (max_star_packing(blue, k) > t - 1) {
          ++out.stats.packing_rejections;
          continue;
        }
      }
      ++tested;
      ++out.stats.containment_checks;
      if (!subgraph_contains(complement(blue), g)) {
        fail = &blue;
        break;
      }
    }
    out.stats.iso_classes_tested += tested;
    if (fail == nullptr) {
      out.value = N;
      std::ostringstream cert;
      cert << "every admissible blue graph on " << N << " vertices (" << tested
           << " isomorphism classes) forced a red copy of the pattern; "
           << out.stats.containment_checks << " containment checks, "
           << out.stats.packing_rejections << " packing rejections across the search";
      out.certificate = cert.str();
      return out;
    }
    out.witnesses.push_back({N, *fail});
  }
  std::ostringstream msg;
  msg << name << ": unresolved within order cap " << n_cap;
  throw std::runtime_error(msg.str());
}

}  // namespace

RamseyResult exact_ramsey_star(const Graph& g, int k, int n_cap) {
  return ramsey_search(g, k, 1, n_cap, true, "exact_ramsey_star");
}

RamseyResult exact_ramsey_multistar(const Graph& g, int k, int t, int n_cap) {
  return ramsey_search(g, k, t, n_cap, false, "exact_ramsey_multistar");
}

bool verify_ramsey_witness(const RamseyWitness& w, const Graph& g, int k, int t) {
  if (w.order != w.blue.order() || w.order < 1) return false;
  if (subgraph_contains(complement(w.blue), g).has_value()) return false;
  return max_star_packing(w.blue, k) <= t - 1;
}

int alpha_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > 24)
    throw std::invalid_argument("alpha_bruteforce: order above the subset-enumeration cap");
  int best = 0;
  Bitset chosen(n);
  std::function<void(int, int)> walk = [&](int v, int cnt) {
    if (cnt > best) best = cnt;
    if (v == n || cnt + (n - v) <= best) return;
    if ((g.row(v) & chosen).none()) {
      chosen.set(v);
      walk(v + 1, cnt + 1);
      chosen.reset(v);
    }
    walk(v + 1, cnt);
  };
  walk(0, 0);
  return best;
}

long long chvatal_value(long long n_tree, long long m_clique) {
  if (n_tree < 1 || m_clique < 1)
    throw std::invalid_argument("chvatal_value: both orders must be positive");
  return (n_tree - 1) * (m_clique - 1) + 1;
}

}  // namespace starspan
