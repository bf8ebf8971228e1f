#pragma once

#include <cstdint>
#include <vector>

#include "starspan/coloring.hpp"
#include "starspan/graph.hpp"

namespace starspan {

// Seeded random source.  All draws go through rejection sampling on the raw
// 64-bit stream, so identical seeds give identical sequences on every
// platform and standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, m); m >= 1.
  std::uint64_t below(std::uint64_t m);
  int below_int(int m) { return static_cast<int>(below(static_cast<std::uint64_t>(m))); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Random tree by sequential attachment; every vertex keeps degree <= cap.
// cap >= 2 guarantees attachment never gets stuck.
Graph random_tree(Rng& rng, int n, int degree_cap);

// Random connected graph: a spanning random tree plus e-(n-1) extra edges.
Graph random_connected_with_edges(Rng& rng, int n, long long e);

// Rejection-samples random connected graphs with n vertices, between n-1 and
// max_edges edges, and alpha_prime >= min_alpha_prime.
Graph random_connected_pattern(Rng& rng, int n, long long max_edges, int min_alpha_prime,
                               int max_tries = 200);

// Host coloring whose blue graph is random with max degree <= k-1, so the
// red graph has min degree >= order-k.
TwoColoring random_low_blue_host(Rng& rng, int order, int k);

// Host whose blue graph is one K_{1,k} plus a partial matching elsewhere:
// its maximum blue k-star packing is exactly 1 (k >= 2).
TwoColoring adversarial_single_star_host(Rng& rng, int order, int k);

// Host whose blue graph is two disjoint K_{1,k} plus a partial matching
// elsewhere: maximum blue k-star packing exactly 2 (k >= 2).
TwoColoring adversarial_two_star_host(Rng& rng, int order, int k);

// Relabels a coloring by a random permutation (fuzzing aid);
// to_original[new_label] = old_label.
ColoringMap shuffled_coloring(const TwoColoring& col, Rng& rng);

}  // namespace starspan
