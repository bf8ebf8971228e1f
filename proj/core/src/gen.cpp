#include "starspan/gen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "starspan/alpha.hpp"

namespace starspan {

std::uint64_t Rng::next() {
  // splitmix64: small, fast, and identical everywhere.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("Rng::below: m must be positive");
  const std::uint64_t threshold = (0 - m) % m;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % m;
  }
}

Graph random_tree(Rng& rng, int n, int degree_cap) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be at least 1");
  if (n >= 2 && degree_cap < 2)
    throw std::invalid_argument("random_tree: degree cap must be at least 2");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(n, 0);
  for (int v = 1; v < n; ++v) {
    std::vector<int> candidates;
    for (int u = 0; u < v; ++u)
      if (deg[u] < degree_cap) candidates.push_back(u);
    int u = candidates[rng.below_int(static_cast<int>(candidates.size()))];
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_with_edges(Rng& rng, int n, long long e) {
  if (n < 1) throw std::invalid_argument("random_connected_with_edges: n must be at least 1");
  const long long max_e = static_cast<long long>(n) * (n - 1) / 2;
  if (e < n - 1 || e > max_e)
    throw std::invalid_argument("random_connected_with_edges: edge count out of range");
  Graph tree = random_tree(rng, n, std::max(2, n - 1));
  std::vector<Bitset> rows(n, Bitset(n));
  std::vector<std::pair<int, int>> edges = tree.edge_list();
  for (auto [u, v] : edges) {
    rows[u].set(v);
    rows[v].set(u);
  }
  long long need = e - (n - 1);
  while (need > 0) {
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v || rows[u].test(v)) continue;
    rows[u].set(v);
    rows[v].set(u);
    edges.emplace_back(u, v);
    --need;
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_pattern(Rng& rng, int n, long long max_edges, int min_alpha_prime,
                               int max_tries) {
  if (max_edges < n - 1)
    throw std::invalid_argument("random_connected_pattern: edge budget below n-1");
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    long long e = (n - 1) + static_cast<long long>(rng.below(
                                static_cast<std::uint64_t>(max_edges - (n - 1) + 1)));
    Graph g = random_connected_with_edges(rng, n, e);
    if (min_alpha_prime <= 0 || alpha_prime(g).alpha_prime >= min_alpha_prime) return g;
  }
  std::ostringstream msg;
  msg << "random_connected_pattern: no sample reached alpha_prime >= " << min_alpha_prime
      << " within " << max_tries << " tries";
  throw std::runtime_error(msg.str());
}

namespace {

// Blue edges with every degree capped at k-1, visiting shuffled vertex pairs
// with a coin flip each.
TwoColoring host_from_blue_edges(int order, const std::vector<std::pair<int, int>>& blue_edges) {
  Graph blue = Graph::from_edges(order, blue_edges);
  return TwoColoring(complement(blue));
}

// Pairs up `pool` and adds a blue matching edge per pair on a coin flip.
void add_matching_noise(Rng& rng, std::vector<int>& pool,
                        std::vector<std::pair<int, int>>& blue_edges) {
  rng.shuffle(pool);
  for (std::size_t i = 0; i + 1 < pool.size(); i += 2)
    if (rng.below(2) == 1) blue_edges.emplace_back(pool[i], pool[i + 1]);
}

}  // namespace

TwoColoring random_low_blue_host(Rng& rng, int order, int k) {
  if (order < 1) throw std::invalid_argument("random_low_blue_host: order must be at least 1");
  if (k < 1) throw std::invalid_argument("random_low_blue_host: k must be at least 1");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) pairs.emplace_back(u, v);
  rng.shuffle(pairs);
  std::vector<int> blue_deg(order, 0);
  std::vector<std::pair<int, int>> blue_edges;
  for (auto [u, v] : pairs) {
    if (blue_deg[u] >= k - 1 || blue_deg[v] >= k - 1) continue;
    if (rng.below(2) == 0) continue;
    blue_edges.emplace_back(u, v);
    ++blue_deg[u];
    ++blue_deg[v];
  }
  return host_from_blue_edges(order, blue_edges);
}

TwoColoring adversarial_single_star_host(Rng& rng, int order, int k) {
  if (k < 2) throw std::invalid_argument("adversarial_single_star_host: k must be at least 2");
  if (order < k + 1)
    throw std::invalid_argument("adversarial_single_star_host: order must exceed k");
  std::vector<int> verts(order);
  for (int i = 0; i < order; ++i) verts[i] = i;
  rng.shuffle(verts);
  std::vector<std::pair<int, int>> blue_edges;
  for (int i = 1; i <= k; ++i) blue_edges.emplace_back(verts[0], verts[i]);
  std::vector<int> pool(verts.begin() + k + 1, verts.end());
  add_matching_noise(rng, pool, blue_edges);
  return host_from_blue_edges(order, blue_edges);
}

TwoColoring adversarial_two_star_host(Rng& rng, int order, int k) {
  if (k < 2) throw std::invalid_argument("adversarial_two_star_host: k must be at least 2");
  if (order < 2 * (k + 1))
    throw std::invalid_argument("adversarial_two_star_host: order must fit two disjoint stars");
  std::vector<int> verts(order);
  for (int i = 0; i < order; ++i) verts[i] = i;
  rng.shuffle(verts);
  std::vector<std::pair<int, int>> blue_edges;
  for (int i = 1; i <= k; ++i) blue_edges.emplace_back(verts[0], verts[i]);
  for (int i = k + 2; i <= 2 * k + 1; ++i) blue_edges.emplace_back(verts[k + 1], verts[i]);
  std::vector<int> pool(verts.begin() + 2 * k + 2, verts.end());
  add_matching_noise(rng, pool, blue_edges);
  return host_from_blue_edges(order, blue_edges);
}

ColoringMap shuffled_coloring(const TwoColoring& col, Rng& rng) {
  const int n = col.order();
  std::vector<int> old_of_new(n);
  for (int i = 0; i < n; ++i) old_of_new[i] = i;
  rng.shuffle(old_of_new);
  std::vector<int> new_of_old(n);
  for (int i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;
  std::vector<std::pair<int, int>> red_edges;
  for (auto [u, v] : col.red().edge_list())
    red_edges.emplace_back(new_of_old[u], new_of_old[v]);
  return {TwoColoring(Graph::from_edges(n, red_edges)), std::move(old_of_new)};
}

}  // namespace starspan
