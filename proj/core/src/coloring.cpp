#include "starspan/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "starspan/matching.hpp"

namespace starspan {

ColoringMap restrict_coloring(const TwoColoring& col, const std::vector<int>& keep) {
  auto sub = induced_subgraph(col.red(), keep);
  return {TwoColoring(std::move(sub.graph)), std::move(sub.to_original)};
}

ColoringMap restrict_coloring(const TwoColoring& col, const Bitset& keep) {
  auto sub = induced_subgraph(col.red(), keep);
  return {TwoColoring(std::move(sub.graph)), std::move(sub.to_original)};
}

std::optional<BlueStar> find_blue_star(const TwoColoring& col, int k, const Bitset& forbidden) {
  if (k < 1) throw std::invalid_argument("find_blue_star: k must be at least 1");
  const int n = col.order();
  if (static_cast<int>(forbidden.size()) != n)
    throw std::invalid_argument("find_blue_star: forbidden mask size mismatch");
  Bitset allowed = ~forbidden;
  for (auto v = allowed.find_first(); v != Bitset::npos; v = allowed.find_next(v)) {
    Bitset blue = col.blue_row(static_cast<int>(v)) & allowed;
    if (static_cast<int>(blue.count()) < k) continue;
    BlueStar star;
    star.center = static_cast<int>(v);
    for (auto u = blue.find_first(); static_cast<int>(star.leaves.size()) < k;
         u = blue.find_next(u))
      star.leaves.push_back(static_cast<int>(u));
    return star;
  }
  return std::nullopt;
}

std::optional<BlueStar> find_blue_star(const TwoColoring& col, int k) {
  return find_blue_star(col, k, Bitset(col.order()));
}

PackResult pack_blue_stars(const TwoColoring& col, int k, int t) {
  if (k < 1) throw std::invalid_argument("pack_blue_stars: k must be at least 1");
  if (t < 1) throw std::invalid_argument("pack_blue_stars: t must be at least 1");
  PackResult out;
  out.pack.vertex_set = Bitset(col.order());
  while (static_cast<int>(out.pack.stars.size()) < t) {
    auto star = find_blue_star(col, k, out.pack.vertex_set);
    if (!star) break;
    out.pack.vertex_set.set(star->center);
    for (int u : star->leaves) out.pack.vertex_set.set(u);
    out.pack.stars.push_back(std::move(*star));
  }
  out.reached_t = static_cast<int>(out.pack.stars.size()) == t;
  return out;
}

bool verify_star_pack(const TwoColoring& col, const StarPack& pack, int k) {
  const int n = col.order();
  if (static_cast<int>(pack.vertex_set.size()) != n) return false;
  Bitset seen(n);
  for (const auto& star : pack.stars) {
    if (star.center < 0 || star.center >= n || seen.test(star.center)) return false;
    seen.set(star.center);
    if (static_cast<int>(star.leaves.size()) != k) return false;
    for (int u : star.leaves) {
      if (u < 0 || u >= n || seen.test(u)) return false;
      seen.set(u);
      if (!col.is_blue(star.center, u)) return false;
    }
  }
  return seen == pack.vertex_set;
}

MatchingOutcome red_matching_or_blue_biclique(const TwoColoring& col, const std::vector<int>& X,
                                              const std::vector<int>& Y) {
  const int n = col.order();
  Bitset seen(n);
  for (int v : X) {
    if (v < 0 || v >= n || seen.test(v))
      throw std::invalid_argument("red_matching_or_blue_biclique: X has invalid or repeated vertices");
    seen.set(v);
  }
  for (int v : Y) {
    if (v < 0 || v >= n || seen.test(v))
      throw std::invalid_argument("red_matching_or_blue_biclique: X and Y overlap or Y repeats");
    seen.set(v);
  }
  if (X.size() > Y.size())
    throw std::invalid_argument("red_matching_or_blue_biclique: |X| must be at most |Y|");

  const int ny = static_cast<int>(Y.size());
  std::vector<Bitset> adj(X.size(), Bitset(ny));
  for (size_t i = 0; i < X.size(); ++i)
    for (int j = 0; j < ny; ++j)
      if (col.is_red(X[i], Y[j])) adj[i].set(j);

  auto m = maximum_bipartite_matching(adj, ny);
  MatchingOutcome out;
  if (m.size == static_cast<int>(X.size())) {
    out.kind = MatchingOutcomeKind::RedMatching;
    for (size_t i = 0; i < X.size(); ++i) out.matching.emplace_back(X[i], Y[m.match_x[i]]);
    return out;
  }

  auto h = hall_violator(adj, ny, m);
  out.kind = MatchingOutcomeKind::BlueBiclique;
  out.c = static_cast<int>(h.y_neighbors.size());
  for (int i : h.x_side) out.x_side.push_back(X[i]);
  Bitset red_nbh(ny);
  for (int j : h.y_neighbors) red_nbh.set(j);
  for (int j = 0; j < ny; ++j)
    if (!red_nbh.test(j)) out.y_side.push_back(Y[j]);
  if (!verify_matching_outcome(col, X, Y, out))
    throw std::logic_error("red_matching_or_blue_biclique: biclique verification failed");
  return out;
}

bool verify_matching_outcome(const TwoColoring& col, const std::vector<int>& X,
                             const std::vector<int>& Y, const MatchingOutcome& out) {
  const int n = col.order();
  auto member = [n](const std::vector<int>& vs) {
    Bitset b(n);
    for (int v : vs) b.set(v);
    return b;
  };
  Bitset in_x = member(X), in_y = member(Y);
  if (out.kind == MatchingOutcomeKind::RedMatching) {
    if (out.matching.size() != X.size()) return false;
    Bitset used_x(n), used_y(n);
    for (auto [x, y] : out.matching) {
      if (!in_x.test(x) || !in_y.test(y)) return false;
      if (used_x.test(x) || used_y.test(y)) return false;
      used_x.set(x);
      used_y.set(y);
      if (!col.is_red(x, y)) return false;
    }
    return true;
  }
  if (out.c < 0 || out.c > static_cast<int>(X.size()) - 1) return false;
  if (out.x_side.size() != static_cast<size_t>(out.c) + 1) return false;
  if (out.y_side.size() != Y.size() - static_cast<size_t>(out.c)) return false;
  for (int x : out.x_side)
    if (!in_x.test(x)) return false;
  for (int y : out.y_side)
    if (!in_y.test(y)) return false;
  for (int x : out.x_side)
    for (int y : out.y_side)
      if (!col.is_blue(x, y)) return false;
  return true;
}

}  // namespace starspan
