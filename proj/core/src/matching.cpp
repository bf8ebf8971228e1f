#include "starspan/matching.hpp"

#include <stdexcept>

namespace starspan {
namespace {

bool try_augment(int x, const std::vector<Bitset>& adj, std::vector<int>& match_x,
                 std::vector<int>& match_y, std::vector<char>& visited) {
  const Bitset& row = adj[x];
  for (auto y = row.find_first(); y != Bitset::npos; y = row.find_next(y)) {
    int yi = static_cast<int>(y);
    if (visited[yi]) continue;
    visited[yi] = 1;
    if (match_y[yi] < 0 || try_augment(match_y[yi], adj, match_x, match_y, visited)) {
      match_x[x] = yi;
      match_y[yi] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

BipartiteMatching maximum_bipartite_matching(const std::vector<Bitset>& adj, int ny) {
  if (ny < 0) throw std::invalid_argument("maximum_bipartite_matching: negative right size");
  for (const auto& row : adj)
    if (static_cast<int>(row.size()) != ny)
      throw std::invalid_argument("maximum_bipartite_matching: adjacency row size mismatch");
  const int nx = static_cast<int>(adj.size());
  BipartiteMatching m;
  m.match_x.assign(nx, -1);
  m.match_y.assign(ny, -1);
  for (int x = 0; x < nx; ++x) {
    std::vector<char> visited(ny, 0);
    if (try_augment(x, adj, m.match_x, m.match_y, visited)) ++m.size;
  }
  return m;
}

HallViolator hall_violator(const std::vector<Bitset>& adj, int ny, const BipartiteMatching& m) {
  const int nx = static_cast<int>(adj.size());
  int x0 = -1;
  for (int x = 0; x < nx; ++x) {
    if (m.match_x[x] < 0) {
      x0 = x;
      break;
    }
  }
  if (x0 < 0) throw std::invalid_argument("hall_violator: matching covers every left vertex");

  Bitset in_s(nx), in_t(ny);
  std::vector<int> queue{x0};
  in_s.set(x0);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const Bitset& row = adj[queue[qi]];
    for (auto y = row.find_first(); y != Bitset::npos; y = row.find_next(y)) {
      int yi = static_cast<int>(y);
      if (in_t.test(yi)) continue;
      in_t.set(yi);
      int xm = m.match_y[yi];
      if (xm < 0)
        throw std::logic_error("hall_violator: augmenting path exists, matching was not maximum");
      if (!in_s.test(xm)) {
        in_s.set(xm);
        queue.push_back(xm);
      }
    }
  }

  HallViolator h;
  h.x_side = bits(in_s);
  h.y_neighbors = bits(in_t);
  if (h.x_side.size() != h.y_neighbors.size() + 1)
    throw std::logic_error("hall_violator: alternating reachability size invariant failed");
  return h;
}

}  // namespace starspan
