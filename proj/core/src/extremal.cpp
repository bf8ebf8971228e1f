#include "starspan/extremal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "starspan/oracle.hpp"

namespace starspan {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Disjoint cliques of the given sizes, laid out consecutively.
Graph clique_union(const std::vector<int>& sizes) {
  long long total = 0;
  for (int s : sizes) total += s;
  std::vector<std::pair<int, int>> edges;
  int base = 0;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) edges.emplace_back(base + i, base + j);
    base += s;
  }
  return Graph::from_edges(static_cast<int>(total), edges);
}

}  // namespace

BoundReport bound_report(long long n, long long k, long long t, long long alpha_prime) {
  require(n >= 1, "bound_report: n >= 1 violated");
  require(k >= 1, "bound_report: k >= 1 violated");
  require(t >= 1, "bound_report: t >= 1 violated");
  require(alpha_prime >= 0, "bound_report: alpha_prime >= 0 violated");
  BoundReport r;
  r.n = n;
  r.k = k;
  r.t = t;
  r.alpha_prime = alpha_prime;
  r.beta = (n + k - 2 - alpha_prime) % k == 0 ? 0 : 1;
  r.lower = std::max(n, n + k - 1 - alpha_prime - r.beta);
  r.upper = std::max(n, n + k - 1 - alpha_prime);
  r.multistar_upper = r.upper + t - 1;
  return r;
}

ExtremalConstruction build_star_lower_construction(long long n, int k, int alpha_prime) {
  require(n >= 1, "star construction: n >= 1 violated");
  require(k >= 2, "star construction: k >= 2 violated");
  require(alpha_prime >= 0, "star construction: alpha_prime >= 0 violated");
  require(alpha_prime <= k - 1, "star construction: alpha_prime <= k-1 violated");
  int beta = (n + k - 2 - alpha_prime) % k == 0 ? 0 : 1;
  long long m = n + k - 2 - alpha_prime - beta;
  require(m >= 1, "star construction: order n+k-2-alpha_prime-beta >= 1 violated");
  // m = t*k + s with 0 < s <= k.
  long long t = (m - 1) / k;
  long long s = m - t * k;
  long long mult_k = t - k + 1 + s;
  require(mult_k >= 0, "star construction: clique multiplicity t-k+1+s >= 0 violated");

  ExtremalConstruction c;
  c.cliques_are_red = false;
  for (long long i = 0; i < mult_k; ++i) c.clique_sizes.push_back(k);
  for (long long i = 0; i < k - s; ++i) c.clique_sizes.push_back(k - 1);
  Graph blue = clique_union(c.clique_sizes);
  c.coloring = TwoColoring(complement(blue));
  return c;
}

ExtremalConstruction build_clique_construction(long long n) {
  require(n >= 2, "clique construction: n >= 2 violated");
  ExtremalConstruction c;
  c.cliques_are_red = true;
  c.clique_sizes.push_back(static_cast<int>(n - 1));
  c.coloring = TwoColoring(clique_union(c.clique_sizes));
  return c;
}

ExtremalConstruction build_multistar_construction(long long n, int t) {
  require(n >= 2, "multistar construction: n >= 2 violated");
  require(t >= 1, "multistar construction: t >= 1 violated");
  ExtremalConstruction c;
  c.cliques_are_red = true;
  c.clique_sizes.push_back(static_cast<int>(n - 1));
  if (t >= 2) c.clique_sizes.push_back(t - 1);
  c.coloring = TwoColoring(clique_union(c.clique_sizes));
  return c;
}

ConstructionValidation validate_construction(const ExtremalConstruction& c, const Graph& pattern,
                                             int k, int t, int exhaustive_limit) {
  require(k >= 1, "validate_construction: k >= 1 violated");
  require(t >= 1, "validate_construction: t >= 1 violated");
  ConstructionValidation v;

  Graph described = clique_union(c.clique_sizes);
  const Graph& clique_side = c.cliques_are_red ? c.coloring.red() : complement(c.coloring.red());
  v.structure_matches = clique_side == described;

  v.greedy_pack_fails = !pack_blue_stars(c.coloring, k, t).reached_t;

  constexpr int kExactPackingCap = 20;
  if (c.coloring.order() <= exhaustive_limit && c.coloring.order() <= kExactPackingCap) {
    Graph blue = complement(c.coloring.red());
    v.exhaustive_pack_fails = max_star_packing(blue, k) <= t - 1;
  }

  if (pattern.order() <= exhaustive_limit) {
    v.red_copy_absent = !subgraph_contains(c.coloring.red(), pattern).has_value();
    v.red_note = "red side searched exhaustively";
  } else {
    std::ostringstream note;
    note << "red-side absence rests on the construction's counting argument; not machine-checked"
         << " above pattern order " << exhaustive_limit;
    v.red_note = note.str();
  }
  return v;
}

mpq_class threshold_f(int k, const mpq_class& c) {
  require(k >= 2, "threshold f: k >= 2 violated");
  require(c > 0, "threshold f: c > 0 violated");
  mpq_class kk(k);
  mpq_class lead = c / (24 * kk);
  mpq_class denom = 12 * kk - 12 + 24 * kk / c;
  mpq_class poly = 2 * kk * kk * kk + 13 * kk * kk - 40 * kk + 25;
  mpq_class r = lead * denom * poly;
  r.canonicalize();
  return r;
}

mpq_class threshold_f_expanded(int k, const mpq_class& c) {
  require(k >= 2, "threshold f: k >= 2 violated");
  require(c > 0, "threshold f: c > 0 violated");
  mpq_class kk(k);
  mpq_class r = (c + 2) * kk * kk * kk + (11 * c / 2 + 13) * kk * kk - (53 * c / 2 + 40) * kk +
                (65 * c / 2 + 25) - 25 * c / (2 * kk);
  r.canonicalize();
  return r;
}

mpq_class threshold_h(int k, int t, const mpq_class& c) {
  require(k >= 2, "threshold h: k >= 2 violated");
  require(t >= 1, "threshold h: t >= 1 violated");
  require(c > 0, "threshold h: c > 0 violated");
  mpq_class kk(k), tt(t);
  mpq_class lead = c / (24 * tt * kk);
  mpq_class denom = 9 * tt * kk - 3 * kk - 6 + 24 * tt * kk / c;
  mpq_class poly = 2 * tt * kk * kk * kk + 14 * tt * tt * kk * kk - 10 * tt * kk * kk -
                   3 * kk * kk - 25 * tt * kk + 15 * kk + 7;
  mpq_class r = lead * denom * poly;
  r.canonicalize();
  return r;
}

mpq_class threshold_h_expanded(int k, int t, const mpq_class& c) {
  require(k >= 2, "threshold h: k >= 2 violated");
  require(t >= 1, "threshold h: t >= 1 violated");
  require(c > 0, "threshold h: c > 0 violated");
  mpq_class kk(k), tt(t);
  mpq_class r = (3 * c + 8) / 4 * tt * kk * kk * kk - c / 4 * kk * kk * kk +
                (21 * c + 56) / 4 * tt * tt * kk * kk - (11 * c + 20) / 2 * tt * kk * kk -
                (3 * c + 24) / 8 * kk * kk + 3 * c / (8 * tt) * kk * kk -
                (103 * c + 200) / 8 * tt * kk + (45 * c + 60) / 4 * kk - 9 * c / (8 * tt) * kk +
                (71 * c + 56) / 8 - 37 * c / (8 * tt) - 7 * c / (4 * tt * kk);
  r.canonicalize();
  return r;
}

ThresholdReport thresholds(int k, int t, const mpq_class& c) {
  ThresholdReport r;
  r.f = threshold_f(k, c);
  r.h = threshold_h(k, t, c);
  if (r.f != threshold_f_expanded(k, c) || r.h != threshold_h_expanded(k, t, c))
    throw std::logic_error("thresholds: product and expanded forms disagree");
  long long kk = k, tt = t;
  r.star_order_min = 6 * kk * kk * kk;
  r.multistar_order_min = 28 * tt * tt * kk * kk * kk;
  mpq_class kq(k), tq(t);
  r.star_edge_denominator = 12 * kq - 12 + 24 * kq / c;
  r.star_edge_denominator.canonicalize();
  r.multistar_edge_denominator = 9 * tq * kq - 3 * kq - 6 + 24 * tq * kq / c;
  r.multistar_edge_denominator.canonicalize();
  return r;
}

}  // namespace starspan
