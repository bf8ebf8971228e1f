#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

// A deliberately naive Ramsey-number enumerator used as an independent
// cross-check of the library's search.  For each host order N it walks every
// blue graph on N labeled vertices -- all 2^(N choose 2) edge subsets, with
// no isomorphism reduction and no packing-based pruning -- and tests the red
// side by plain backtracking over every injection of the pattern.  It shares
// no code with the library: patterns come in as raw edge lists and all
// adjacency is kept in bool matrices built here.

namespace naive {

class Injector {
 public:
  Injector(int pattern_order, const std::vector<std::pair<int, int>>& pattern_edges,
           const std::vector<std::vector<bool>>& red)
      : pn_(pattern_order),
        pe_(pattern_edges),
        red_(red),
        host_n_(static_cast<int>(red.size())),
        map_(static_cast<size_t>(pattern_order), -1),
        used_(red.size(), false) {}

  bool found() { return place(0); }

 private:
  bool place(int v) {
    if (v == pn_) return consistent();
    for (int h = 0; h < host_n_; ++h) {
      if (used_[static_cast<size_t>(h)]) continue;
      used_[static_cast<size_t>(h)] = true;
      map_[static_cast<size_t>(v)] = h;
      if (place(v + 1)) return true;
      used_[static_cast<size_t>(h)] = false;
      map_[static_cast<size_t>(v)] = -1;
    }
    return false;
  }

  bool consistent() const {
    for (auto [a, b] : pe_) {
      int ha = map_[static_cast<size_t>(a)];
      int hb = map_[static_cast<size_t>(b)];
      if (!red_[static_cast<size_t>(ha)][static_cast<size_t>(hb)]) return false;
    }
    return true;
  }

  int pn_;
  const std::vector<std::pair<int, int>>& pe_;
  const std::vector<std::vector<bool>>& red_;
  int host_n_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

// Smallest N <= n_cap such that every red/blue edge coloring of K_N contains
// a red copy of the pattern or a blue star with k leaves; -1 if no such N
// exists within the cap.  Usable only at toy scale (N with at most 22 vertex
// pairs).
inline int brute_ramsey_star(int pattern_order,
                             const std::vector<std::pair<int, int>>& pattern_edges, int k,
                             int n_cap) {
  for (int N = 1; N <= n_cap; ++N) {
    long long slots = static_cast<long long>(N) * (N - 1) / 2;
    if (slots > 22)
      throw std::runtime_error("brute_ramsey_star: host order too large for naive enumeration");
    bool bad_found = false;
    for (std::uint64_t mask = 0; mask < (1ULL << slots) && !bad_found; ++mask) {
      std::vector<std::vector<bool>> blue(static_cast<size_t>(N),
                                          std::vector<bool>(static_cast<size_t>(N), false));
      int idx = 0;
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j, ++idx)
          if (mask >> idx & 1U) {
            blue[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
            blue[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
          }

      bool has_blue_star = false;
      for (int v = 0; v < N && !has_blue_star; ++v) {
        int d = 0;
        for (int u = 0; u < N; ++u)
          if (blue[static_cast<size_t>(v)][static_cast<size_t>(u)]) ++d;
        if (d >= k) has_blue_star = true;
      }
      if (has_blue_star) continue;

      std::vector<std::vector<bool>> red(static_cast<size_t>(N),
                                         std::vector<bool>(static_cast<size_t>(N), false));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          red[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              (i != j) && !blue[static_cast<size_t>(i)][static_cast<size_t>(j)];

      Injector inj(pattern_order, pattern_edges, red);
      if (!inj.found()) bad_found = true;
    }
    if (!bad_found) return N;
  }
  return -1;
}

}  // namespace naive
