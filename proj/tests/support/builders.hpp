#pragma once

#include <utility>
#include <vector>

#include "starspan/graph.hpp"

namespace starspan::testing {

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

// Center 0, leaves 1..m.
inline Graph star(int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
  return Graph::from_edges(m + 1, e);
}

// Center 0; legs of the given lengths, vertices numbered leg by leg.
inline Graph spider(const std::vector<int>& legs) {
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, e);
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);            // outer C_5
  for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);    // inner pentagram
  for (int i = 0; i < 5; ++i) e.emplace_back(i, 5 + i);                  // spokes
  return Graph::from_edges(10, e);
}

inline bool is_independent_set(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace starspan::testing
