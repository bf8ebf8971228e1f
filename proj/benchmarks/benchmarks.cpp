// Microbenchmarks for the hot paths: exact independence computations, the
// embedding operations at their production scales, canonical forms, star
// packing, and graph6 serialization.  All inputs are seeded and built
// outside the timed loops.

#include <benchmark/benchmark.h>

#include <vector>

#include "starspan/alpha.hpp"
#include "starspan/coloring.hpp"
#include "starspan/embedder.hpp"
#include "starspan/gen.hpp"
#include "starspan/graph.hpp"
#include "starspan/io.hpp"
#include "starspan/oracle.hpp"

namespace {

using namespace starspan;

Graph sparse_pattern(int n, long long max_edges, int min_alpha_prime, std::uint64_t seed) {
  Rng rng(seed);
  return random_connected_pattern(rng, n, max_edges, min_alpha_prime);
}

TwoColoring low_blue(int order, int k, std::uint64_t seed) {
  Rng rng(seed);
  return random_low_blue_host(rng, order, k);
}

void BM_independence_number_sparse48(benchmark::State& state) {
  Graph g = sparse_pattern(48, 49, 0, 11);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_independence_number_sparse48);

void BM_independence_number_dense12(benchmark::State& state) {
  Rng rng(12);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v)
      if (rng.below(2)) es.emplace_back(u, v);
  Graph g = Graph::from_edges(12, es);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_independence_number_dense12);

void BM_alpha_prime_n162(benchmark::State& state) {
  Graph g = sparse_pattern(162, 164, 0, 13);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_prime(g).alpha_prime);
}
BENCHMARK(BM_alpha_prime_n162);

void BM_embed_spanning_n48(benchmark::State& state) {
  Graph g = sparse_pattern(48, 49, 1, 21);
  TwoColoring col = low_blue(48, 2, 22);
  for (auto _ : state) {
    EmbedResult r = embed_spanning(col, g, 2);
    benchmark::DoNotOptimize(r.is_red());
  }
}
BENCHMARK(BM_embed_spanning_n48);

void BM_embed_sparse_n12(benchmark::State& state) {
  Graph g = sparse_pattern(12, 14, 0, 31);
  TwoColoring col = low_blue(14, 2, 32);
  for (auto _ : state) {
    EmbedResult r = embed_sparse(col, g, 2);
    benchmark::DoNotOptimize(r.is_red());
  }
}
BENCHMARK(BM_embed_sparse_n12);

void BM_embed_multistar_n896(benchmark::State& state) {
  Graph g = sparse_pattern(896, 906, 1, 41);
  Rng rng(42);
  TwoColoring col = adversarial_single_star_host(rng, 897, 2);
  for (auto _ : state) {
    EmbedResult r = embed_vs_multistar(col, g, 2, 2);
    benchmark::DoNotOptimize(r.is_red());
  }
}
BENCHMARK(BM_embed_multistar_n896);

void BM_canonical_form_n12(benchmark::State& state) {
  Graph g = sparse_pattern(12, 14, 0, 51);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form_n12);

void BM_subgraph_contains_p10_in_n16(benchmark::State& state) {
  std::vector<std::pair<int, int>> pe;
  for (int i = 0; i + 1 < 10; ++i) pe.emplace_back(i, i + 1);
  Graph p10 = Graph::from_edges(10, pe);
  Graph host = sparse_pattern(16, 24, 0, 61);
  for (auto _ : state) benchmark::DoNotOptimize(subgraph_contains(host, p10).has_value());
}
BENCHMARK(BM_subgraph_contains_p10_in_n16);

void BM_pack_blue_stars_n897(benchmark::State& state) {
  Rng rng(71);
  TwoColoring col = adversarial_two_star_host(rng, 897, 2);
  for (auto _ : state) {
    PackResult r = pack_blue_stars(col, 2, 2);
    benchmark::DoNotOptimize(r.reached_t);
  }
}
BENCHMARK(BM_pack_blue_stars_n897);

void BM_graph6_roundtrip_n162(benchmark::State& state) {
  Graph g = sparse_pattern(162, 164, 0, 81);
  for (auto _ : state) {
    std::string s = to_graph6(g);
    benchmark::DoNotOptimize(from_graph6(s).order());
  }
}
BENCHMARK(BM_graph6_roundtrip_n162);

}  // namespace

BENCHMARK_MAIN();
