#include "starspan/embedder.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "starspan/alpha.hpp"
#include "starspan/structure.hpp"

namespace starspan {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void ensure(bool ok, const std::string& msg) {
  if (!ok) throw std::logic_error(msg);
}

// Internal result, always expressed in the index space of the coloring the
// routine ran under; callers translate when they restricted the host.
struct Sub {
  std::optional<std::vector<int>> phi;
  std::optional<StarPack> pack;
  bool red() const { return phi.has_value(); }
};

bool phi_ok(const TwoColoring& col, const Graph& g, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != g.order()) return false;
  Bitset seen(col.order());
  for (int v = 0; v < g.order(); ++v) {
    int h = phi[v];
    if (h < 0 || h >= col.order() || seen.test(h)) return false;
    seen.set(h);
  }
  for (auto [a, b] : g.edge_list())
    if (!col.is_red(phi[a], phi[b])) return false;
  return true;
}

void check_phi(const TwoColoring& col, const Graph& g, const std::vector<int>& phi,
               const std::string& where) {
  ensure(phi_ok(col, g, phi), "red certificate failed verification in " + where);
}

Sub sub_red(std::vector<int> phi) {
  Sub s;
  s.phi = std::move(phi);
  return s;
}

StarPack make_pack(int order, std::vector<BlueStar> stars) {
  StarPack p;
  p.vertex_set = Bitset(order);
  for (const auto& s : stars) {
    p.vertex_set.set(s.center);
    for (int l : s.leaves) p.vertex_set.set(l);
  }
  p.stars = std::move(stars);
  return p;
}

Sub sub_blue(const TwoColoring& col, StarPack pack, int k, const std::string& where) {
  ensure(verify_star_pack(col, pack, k), "blue certificate failed verification in " + where);
  Sub s;
  s.pack = std::move(pack);
  return s;
}

Sub sub_blue_star(const TwoColoring& col, BlueStar star, int k, const std::string& where) {
  return sub_blue(col, make_pack(col.order(), {std::move(star)}), k, where);
}

// Appends fresh stars (disjoint from the pack by construction) to an
// already-verified pack and re-verifies the union.
Sub sub_blue_joined(const TwoColoring& col, const StarPack& base, std::vector<BlueStar> extra,
                    int k, const std::string& where) {
  std::vector<BlueStar> stars = base.stars;
  for (auto& s : extra) stars.push_back(std::move(s));
  return sub_blue(col, make_pack(col.order(), std::move(stars)), k, where);
}

StarPack translate_pack(const StarPack& pack, const std::vector<int>& to_original,
                        int outer_order) {
  std::vector<BlueStar> stars;
  stars.reserve(pack.stars.size());
  for (const auto& s : pack.stars) {
    BlueStar t;
    t.center = to_original[s.center];
    t.leaves.reserve(s.leaves.size());
    for (int l : s.leaves) t.leaves.push_back(to_original[l]);
    stars.push_back(std::move(t));
  }
  return make_pack(outer_order, std::move(stars));
}

// First k blue neighbors of `center` inside `allowed`, ascending.
std::optional<BlueStar> blue_star_at(const TwoColoring& col, int center, int k,
                                     const Bitset& allowed) {
  Bitset cand = col.blue_row(center) & allowed;
  BlueStar s;
  s.center = center;
  for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
    s.leaves.push_back(static_cast<int>(v));
    if (static_cast<int>(s.leaves.size()) == k) return s;
  }
  return std::nullopt;
}

Bitset full_mask(int n) {
  Bitset b(n);
  b.set();
  return b;
}

// Certified test that alpha(g - N[v]) >= m for every v: an ascending greedy
// independent set per vertex, with the exact solver as fallback.
bool alpha_prime_at_least(const Graph& g, int m) {
  if (m <= 0) return true;
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    Bitset alive = ~g.row(v);
    alive.reset(v);
    int cnt = 0;
    Bitset chosen(n);
    for (auto u = alive.find_first(); u != Bitset::npos && cnt < m; u = alive.find_next(u)) {
      if ((g.row(static_cast<int>(u)) & chosen).none()) {
        chosen.set(u);
        ++cnt;
      }
    }
    if (cnt < m && independence_number_within(g, alive) < m) return false;
  }
  return true;
}

// Independent set of size min(target, alpha(g)): greedy by (degree, index)
// first, exact solve when the greedy stalls short.  Ascending output.
std::vector<int> independent_set_up_to(const Graph& g, int target) {
  if (target <= 0) return {};
  const int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  Bitset chosen(n);
  std::vector<int> out;
  for (int v : order) {
    if (static_cast<int>(out.size()) == target) break;
    if ((g.row(v) & chosen).none()) {
      chosen.set(v);
      out.push_back(v);
    }
  }
  if (static_cast<int>(out.size()) < target) {
    std::vector<int> best = maximum_independent_set(g);
    if (best.size() > out.size()) {
      std::sort(best.begin(), best.end());
      if (static_cast<int>(best.size()) > target) best.resize(target);
      out = std::move(best);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// k = 1 shortcut: any blue edge is already a blue star, and a coloring with
// no blue edge is an all-red clique where the identity placement works.
Sub all_red_or_blue_edge(const TwoColoring& col, const Graph& g) {
  const int N = col.order();
  ensure(N >= g.order(), "single-edge star shortcut: host smaller than the pattern");
  for (int u = 0; u < N; ++u) {
    Bitset b = col.blue_row(u);
    auto v = b.find_first();
    if (v != Bitset::npos)
      return sub_blue_star(col, BlueStar{u, {static_cast<int>(v)}}, 1, "blue edge scan");
  }
  std::vector<int> phi(g.order());
  std::iota(phi.begin(), phi.end(), 0);
  check_phi(col, g, phi, "all-red identity placement");
  return sub_red(std::move(phi));
}

// Joins every later component's smallest vertex to the first component's
// smallest vertex, turning a forest into a tree on the same vertex set.
Graph pad_forest_to_tree(const Graph& f) {
  std::vector<int> comp = f.component_ids();
  int nc = f.component_count();
  std::vector<int> rep(nc, -1);
  for (int v = 0; v < f.order(); ++v)
    if (rep[comp[v]] < 0) rep[comp[v]] = v;
  Graph t = f;
  for (int c = 0; c < nc; ++c)
    if (rep[c] != rep[comp[0]]) t = t.with_edge(rep[comp[0]], rep[c]);
  return t;
}

// Smallest vertex left after peeling degree-<=1 vertices: the smallest
// vertex of the unique cycle of a connected unicyclic graph.
int smallest_cycle_vertex(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> gone(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (gone[v] || deg[v] > 1) continue;
      gone[v] = 1;
      changed = true;
      for (int u : g.neighbor_list(v))
        if (!gone[u]) --deg[u];
    }
  }
  for (int v = 0; v < n; ++v)
    if (!gone[v]) return v;
  throw std::logic_error("cycle search: peeling consumed the whole graph");
}

Sub embed_sparse_inner(const TwoColoring& col, const Graph& g, int k);

Sub embed_tree_inner(const TwoColoring& col, const Graph& tree, int k) {
  const int n = tree.order();
  const int N = col.order();
  ensure(N >= n + k - 1, "tree embedding: host order dropped below |T| + k - 1");
  std::vector<int> phi(n, -1);
  Bitset used(N);
  std::vector<int> bfs{0};
  phi[0] = 0;
  used.set(0);
  for (size_t qi = 0; qi < bfs.size(); ++qi) {
    int p = bfs[qi];
    int w = phi[p];
    for (int c : tree.neighbor_list(p)) {
      if (phi[c] >= 0) continue;
      Bitset avail = ~used;
      Bitset cand = col.red_row(w) & avail;
      auto h = cand.find_first();
      if (h == Bitset::npos) {
        // every unused host vertex is blue to w, and at least k remain
        auto star = blue_star_at(col, w, k, avail);
        ensure(star.has_value(),
               "tree embedding: a stalled parent image lacks k unused blue neighbors");
        return sub_blue_star(col, *star, k, "tree embedding");
      }
      phi[c] = static_cast<int>(h);
      used.set(h);
      bfs.push_back(c);
    }
  }
  check_phi(col, tree, phi, "tree embedding");
  return sub_red(std::move(phi));
}

Sub embed_minus_vertex_inner(const TwoColoring& col, const Graph& g, int u, int k) {
  const int n = g.order();
  const int N = col.order();
  const int w = 0;
  if (col.blue_degree(w) >= k) {
    auto star = blue_star_at(col, w, k, full_mask(N));
    ensure(star.has_value(), "anchored embedding: blue degree miscount at the anchor");
    return sub_blue_star(col, *star, k, "anchored embedding");
  }
  VertexMap rem = delete_vertices(g, {u});
  const Graph& h = rem.graph;
  if (h.order() == 0) {
    std::vector<int> phi{w};
    check_phi(col, g, phi, "anchored embedding of a single vertex");
    return sub_red(std::move(phi));
  }
  ColoringMap sub = restrict_coloring(col, col.red_row(w));
  const bool forest = h.is_forest();
  const int required_sub = forest ? h.order() + k - 1 : h.order() + 2 * k - 2;
  ensure(sub.col.order() >= required_sub,
         "anchored embedding: the anchor's red neighborhood is too small");
  Sub inner;
  if (forest) {
    inner = embed_tree_inner(sub.col, pad_forest_to_tree(h), k);
  } else {
    ensure(h.connected(), "anchored embedding: remainder neither forest nor connected");
    inner = embed_sparse_inner(sub.col, h, k);
  }
  if (!inner.red())
    return sub_blue(col, translate_pack(*inner.pack, sub.to_original, N), k,
                    "anchored embedding");
  std::vector<int> phi(n, -1);
  phi[u] = w;
  for (int i = 0; i < h.order(); ++i) phi[rem.to_original[i]] = sub.to_original[(*inner.phi)[i]];
  check_phi(col, g, phi, "anchored embedding");
  return sub_red(std::move(phi));
}

Sub embed_sparse_inner(const TwoColoring& col, const Graph& g, int k) {
  const int n = g.order();
  const int N = col.order();
  ensure(g.connected(), "sparse embedding: pattern became disconnected");
  ensure(g.size() * (2LL * k + 1) <= static_cast<long long>(n) * (2LL * k + 2),
         "sparse embedding: pattern exceeds e <= n(1 + 1/(2k+1))");
  ensure(N >= n + 2 * k - 2, "sparse embedding: host order dropped below n + 2k - 2");
  if (k == 1) return all_red_or_blue_edge(col, g);
  if (n <= 2 * k) {
    if (g.is_tree()) return embed_tree_inner(col, g, k);
    // a connected non-tree within the budget has exactly n edges
    ensure(g.size() == n, "sparse base case: expected a unicyclic pattern");
    return embed_minus_vertex_inner(col, g, smallest_cycle_vertex(g), k);
  }

  auto reduced = reduce_k(g, k);
  const Graph& core = reduced.first;
  const std::vector<ReductionStep>& trace = reduced.second;
  std::vector<char> removed(n, 0);
  for (const auto& st : trace) removed[st.removed_vertex] = 1;
  std::vector<int> kept;
  kept.reserve(n - k);
  for (int v = 0; v < n; ++v)
    if (!removed[v]) kept.push_back(v);
  ensure(static_cast<int>(kept.size()) == core.order() && core.order() == n - k,
         "reduction bookkeeping mismatch");

  const int nc = n - k;
  const long long budget = static_cast<long long>(nc) * (2LL * k + 2);
  std::vector<int> phi(n, -1);
  Bitset used(N);

  if (core.size() * (2LL * k + 1) <= budget) {
    Sub sub = embed_sparse_inner(col, core, k);
    if (!sub.red()) return sub;  // same coloring, no translation needed
    for (int i = 0; i < nc; ++i) {
      phi[kept[i]] = (*sub.phi)[i];
      used.set((*sub.phi)[i]);
    }
  } else {
    ensure(core.size() * (2LL * k + 1) <= budget + (2LL * k + 1),
           "peeled core exceeds its edge budget by more than one edge");
    // drop the smallest non-bridge edge and embed in a red neighborhood
    std::vector<std::pair<int, int>> bridges = core.bridge_list();
    std::optional<std::pair<int, int>> estar;
    for (const auto& e : core.edge_list()) {
      if (!std::binary_search(bridges.begin(), bridges.end(), e)) {
        estar = e;
        break;
      }
    }
    ensure(estar.has_value(), "over-budget core has a cycle, so a non-bridge edge exists");
    Graph dropped = core.without_edge(estar->first, estar->second);

    int w = 0;
    for (int v = 1; v < N; ++v)
      if (col.red_degree(v) > col.red_degree(w)) w = v;
    if (col.blue_degree(w) >= k) {
      auto star = blue_star_at(col, w, k, full_mask(N));
      ensure(star.has_value(), "sparse embedding: blue degree miscount at the dense vertex");
      return sub_blue_star(col, *star, k, "sparse embedding");
    }
    ensure(col.red_degree(w) >= nc + 2 * k - 2,
           "sparse embedding: maximum red degree below the recursion requirement");
    ColoringMap subcol = restrict_coloring(col, col.red_row(w));
    Sub inner = embed_sparse_inner(subcol.col, dropped, k);
    if (!inner.red())
      return sub_blue(col, translate_pack(*inner.pack, subcol.to_original, N), k,
                      "sparse embedding");
    // re-host the smaller endpoint of the dropped edge on w itself: w is
    // red to the whole restricted host, so both the dropped edge and every
    // other edge at that endpoint land on red
    std::vector<int> corephi(nc);
    for (int i = 0; i < nc; ++i) corephi[i] = subcol.to_original[(*inner.phi)[i]];
    corephi[std::min(estar->first, estar->second)] = w;
    for (int i = 0; i < nc; ++i) {
      phi[kept[i]] = corephi[i];
      used.set(corephi[i]);
    }
  }

  // undo the k reduction steps, most recent first: each removed vertex gets
  // the smallest unused host red to all of its neighbors' images, and a
  // failure pigeonholes k blue edges onto one of those images
  for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
    const ReductionStep& st = *it;
    Bitset avail = ~used;
    Bitset cand = avail;
    for (int nb : st.neighbors) cand &= col.red_row(phi[nb]);
    auto h = cand.find_first();
    if (h == Bitset::npos) {
      std::optional<BlueStar> star;
      for (int nb : st.neighbors) {
        star = blue_star_at(col, phi[nb], k, avail);
        if (star.has_value()) break;
      }
      ensure(star.has_value(),
             "reattachment: no neighbor image holds k blue edges into the unused vertices");
      return sub_blue_star(col, *star, k, "sparse embedding");
    }
    phi[st.removed_vertex] = static_cast<int>(h);
    used.set(h);
  }
  check_phi(col, g, phi, "sparse embedding");
  return sub_red(std::move(phi));
}

// ---- spanning-size machinery --------------------------------------------

struct ShortenedPath {
  VertexMap h;              // pattern with the cut run removed and rejoined
  std::vector<int> route;   // surviving route, original labels
};

// Removes path[1..cut] and joins path[0] to path[cut+1]; the cut vertices
// all have degree 2, so the remainder loses exactly cut edges.
ShortenedPath shorten_suspended_path(const Graph& g, const std::vector<int>& path, int cut) {
  ensure(cut >= 1 && cut + 2 <= static_cast<int>(path.size()),
         "path shortening: cut exceeds the suspended path");
  Graph joined = g.with_edge(path[0], path[cut + 1]);
  std::vector<int> drop(path.begin() + 1, path.begin() + cut + 1);
  ShortenedPath out;
  out.h = delete_vertices(joined, drop);
  out.route.push_back(path[0]);
  out.route.insert(out.route.end(), path.begin() + cut + 1, path.end());
  return out;
}

// One lengthening step: the smallest unused host red to both ends of some
// consecutive route pair (leftmost pair first) is spliced between them.
bool lengthen_once(const TwoColoring& col, Bitset& used, std::vector<int>& seq) {
  Bitset avail = ~used;
  for (auto u = avail.find_first(); u != Bitset::npos; u = avail.find_next(u)) {
    int ui = static_cast<int>(u);
    for (size_t j = 0; j + 1 < seq.size(); ++j) {
      if (col.is_red(ui, seq[j]) && col.is_red(ui, seq[j + 1])) {
        seq.insert(seq.begin() + static_cast<long>(j) + 1, ui);
        used.set(u);
        return true;
      }
    }
  }
  return false;
}

Sub embed_spanning_inner(const TwoColoring& col, const Graph& g, int k, int alpha_floor);

// Long suspended path: shorten, embed sparsely, lengthen back; a stalled
// lengthening hands the smallest unused vertex k blue route edges.
Sub spanning_case_path(const TwoColoring& col, const Graph& g, int k,
                       const std::vector<int>& path) {
  const int n = g.order();
  const int N = col.order();
  const int cut = 2 * k - 2;
  ShortenedPath sp = shorten_suspended_path(g, path, cut);
  const Graph& h = sp.h.graph;
  ensure(h.size() * (2LL * k + 1) <= static_cast<long long>(h.order()) * (2LL * k + 2),
         "path case: shortened pattern exceeds the sparse edge budget");
  Sub inner = embed_sparse_inner(col, h, k);
  if (!inner.red()) return inner;  // same coloring

  std::vector<int> phi(n, -1);
  Bitset used(N);
  for (int i = 0; i < h.order(); ++i) {
    phi[sp.h.to_original[i]] = (*inner.phi)[i];
    used.set((*inner.phi)[i]);
  }
  std::vector<int> seq;
  seq.reserve(path.size());
  for (int v : sp.route) seq.push_back(phi[v]);
  for (int step = 0; step < cut; ++step) {
    if (!lengthen_once(col, used, seq)) {
      // the smallest unused vertex misses every consecutive pair in red, so
      // each of the floor(|route|/2) >= k disjoint pairs gives a blue edge
      Bitset avail = ~used;
      auto w = avail.find_first();
      ensure(w != Bitset::npos, "path case: lengthening stalled with no unused vertex");
      auto star = blue_star_at(col, static_cast<int>(w), k, mask_of(N, seq));
      ensure(star.has_value(), "path case: a stalled vertex lacks k blue route neighbors");
      return sub_blue_star(col, *star, k, "path case");
    }
  }
  for (size_t i = 0; i < path.size(); ++i) phi[path[i]] = seq[i];
  check_phi(col, g, phi, "path case");
  return sub_red(std::move(phi));
}

// Large end-edge matching: embed the pattern minus the matched leaves, then
// complete a red matching from the support images into fresh vertices, or
// turn the Hall violator's blue biclique into a blue star.
Sub spanning_case_matching(const TwoColoring& col, const Graph& g, int k,
                           std::vector<std::pair<int, int>> matching) {
  const int n = g.order();
  const int N = col.order();
  const int s = 2 * k - 2;
  ensure(static_cast<int>(matching.size()) >= s, "matching case: too few end edges");
  matching.resize(s);
  std::vector<int> drop;
  drop.reserve(s);
  for (const auto& [leaf, sup] : matching) drop.push_back(leaf);
  VertexMap rem = delete_vertices(g, drop);
  ensure(rem.graph.size() * (2LL * k + 1) <=
             static_cast<long long>(rem.graph.order()) * (2LL * k + 2),
         "matching case: trimmed pattern exceeds the sparse edge budget");
  Sub inner = embed_sparse_inner(col, rem.graph, k);
  if (!inner.red()) return inner;

  std::vector<int> phi(n, -1);
  Bitset used(N);
  for (int i = 0; i < rem.graph.order(); ++i) {
    phi[rem.to_original[i]] = (*inner.phi)[i];
    used.set((*inner.phi)[i]);
  }
  std::vector<int> X;
  X.reserve(s);
  for (const auto& [leaf, sup] : matching) X.push_back(phi[sup]);
  std::vector<int> Y;
  Bitset avail = ~used;
  for (auto y = avail.find_first(); y != Bitset::npos && static_cast<int>(Y.size()) < s;
       y = avail.find_next(y))
    Y.push_back(static_cast<int>(y));
  ensure(static_cast<int>(Y.size()) == s, "matching case: fewer unused vertices than leaves");

  MatchingOutcome out = red_matching_or_blue_biclique(col, X, Y);
  ensure(verify_matching_outcome(col, X, Y, out), "matching case: outcome failed verification");
  if (out.kind == MatchingOutcomeKind::RedMatching) {
    ensure(out.matching.size() == X.size(), "matching case: red matching does not cover X");
    for (const auto& [hx, hy] : out.matching) {
      int idx = -1;
      for (int i = 0; i < s; ++i)
        if (X[i] == hx && phi[matching[i].first] < 0) {
          idx = i;
          break;
        }
      ensure(idx >= 0, "matching case: matched endpoint outside X");
      phi[matching[idx].first] = hy;
      used.set(hy);
    }
    check_phi(col, g, phi, "matching case");
    return sub_red(std::move(phi));
  }
  // blue biclique on (x_side, y_side): one side reaches k
  if (static_cast<int>(out.x_side.size()) >= k) {
    ensure(!out.y_side.empty(), "matching case: Hall violator with an empty far side");
    BlueStar star{out.y_side.front(),
                  std::vector<int>(out.x_side.begin(), out.x_side.begin() + k)};
    return sub_blue_star(col, star, k, "matching case");
  }
  ensure(static_cast<int>(out.y_side.size()) >= k,
         "matching case: both biclique sides below k");
  BlueStar star{out.x_side.front(),
                std::vector<int>(out.y_side.begin(), out.y_side.begin() + k)};
  return sub_blue_star(col, star, k, "matching case");
}

// Returns the vertex with the most degree-1 neighbors (smallest index on
// ties) together with those neighbors, ascending.
std::pair<int, std::vector<int>> max_pendant_center(const Graph& g) {
  const int n = g.order();
  int best = 0, bestCnt = -1;
  for (int v = 0; v < n; ++v) {
    int cnt = 0;
    for (int u : g.neighbor_list(v))
      if (g.degree(u) == 1) ++cnt;
    if (cnt > bestCnt) {
      best = v;
      bestCnt = cnt;
    }
  }
  std::vector<int> leaves;
  for (int u : g.neighbor_list(best))
    if (g.degree(u) == 1) leaves.push_back(u);
  return {best, leaves};
}

// Verifies that deleting pendant leaves at `v` left the graph beyond N[v]
// untouched, so independence there transfers between pattern and remainder.
void check_local_deletion_unchanged(const Graph& g, int v, const VertexMap& rem, int v_in_rem) {
  VertexMap gv = local_deleted_graph(g, v);
  VertexMap hv = local_deleted_graph(rem.graph, v_in_rem);
  std::vector<int> hv_orig;
  hv_orig.reserve(hv.to_original.size());
  for (int i : hv.to_original) hv_orig.push_back(rem.to_original[i]);
  ensure(hv_orig == gv.to_original && hv.graph == gv.graph,
         "pendant deletion changed the graph beyond the center's neighborhood");
}

// Places the pattern vertices of D, ascending, on the smallest hosts of the
// pool (already restricted to red neighbors of the center's image).
void attach_pendants(std::vector<int>& phi, Bitset& used, const std::vector<int>& D,
                     const Bitset& pool, const std::string& where) {
  auto h = pool.find_first();
  for (int d : D) {
    ensure(h != Bitset::npos, "pendant reattachment ran out of pool vertices in " + where);
    phi[d] = static_cast<int>(h);
    used.set(h);
    h = pool.find_next(h);
  }
}

// Star-like remainder: delete k^2 pendant leaves, embed the rest inside the
// common red neighborhood of a maximum-red-degree vertex and the blue
// neighbors it retains, then re-hang the leaves there.
Sub spanning_case_star(const TwoColoring& col, const Graph& g, int k) {
  const int n = g.order();
  const int N = col.order();
  auto [v, leaves] = max_pendant_center(g);
  ensure(static_cast<int>(leaves.size()) >= k * k,
         "star case: no suspended path, no end-edge matching, and too few pendant leaves");
  std::vector<int> D(leaves.begin(), leaves.begin() + k * k);
  VertexMap rem = delete_vertices(g, D);
  std::vector<int> g2rem(n, -1);
  for (int i = 0; i < rem.graph.order(); ++i) g2rem[rem.to_original[i]] = i;
  check_local_deletion_unchanged(g, v, rem, g2rem[v]);

  int u = 0;
  for (int x = 1; x < N; ++x)
    if (col.red_degree(x) > col.red_degree(u)) u = x;
  std::vector<int> B = bits(col.blue_row(u));
  if (static_cast<int>(B.size()) >= k)
    return sub_blue_star(col, BlueStar{u, std::vector<int>(B.begin(), B.begin() + k)}, k,
                         "star case");
  for (int b : B) {
    Bitset cand = col.blue_row(b) & col.red_row(u);
    if (static_cast<int>(cand.count()) >= k - 1) {
      BlueStar star{b, {u}};
      for (auto x = cand.find_first(); static_cast<int>(star.leaves.size()) < k;
           x = cand.find_next(x))
        star.leaves.push_back(static_cast<int>(x));
      return sub_blue_star(col, star, k, "star case");
    }
  }
  // common red neighborhood of u and all of B
  Bitset A = col.red_row(u);
  for (int b : B) A &= col.red_row(b);
  ensure(static_cast<long long>(A.count()) >= static_cast<long long>(N) - (k * k - 2 * k + 2),
         "star case: common red neighborhood below the counting bound");
  ensure(rem.graph.size() * (2LL * k + 1) <=
             static_cast<long long>(rem.graph.order()) * (2LL * k + 2),
         "star case: trimmed pattern exceeds the sparse edge budget");
  ColoringMap ca = restrict_coloring(col, A);
  Sub inner = embed_sparse_inner(ca.col, rem.graph, k);
  if (!inner.red())
    return sub_blue(col, translate_pack(*inner.pack, ca.to_original, N), k, "star case");

  std::vector<int> phi(n, -1);
  Bitset used(N);
  for (int i = 0; i < rem.graph.order(); ++i) {
    phi[rem.to_original[i]] = ca.to_original[(*inner.phi)[i]];
    used.set(phi[rem.to_original[i]]);
  }
  // re-host the center on u: u is red to every vertex of A
  used.reset(phi[v]);
  phi[v] = u;
  used.set(u);
  if (!B.empty()) {
    // swap an independent set of G - N[v] onto the blue neighbors of u,
    // freeing their red-neighborhood hosts for the pendant leaves
    VertexMap gv = local_deleted_graph(g, v);
    std::vector<int> I = independent_set_up_to(gv.graph, static_cast<int>(B.size()));
    for (size_t j = 0; j < I.size(); ++j) {
      int pat = gv.to_original[I[j]];
      used.reset(phi[pat]);
      phi[pat] = B[j];
      used.set(B[j]);
    }
  }
  Bitset pool = col.red_row(u) & ~used;
  ensure(static_cast<int>(pool.count()) >= k * k,
         "star case: pendant pool below k^2 despite the host-order guarantee");
  attach_pendants(phi, used, D, pool, "star case");
  check_phi(col, g, phi, "star case");
  return sub_red(std::move(phi));
}

Sub embed_spanning_inner(const TwoColoring& col, const Graph& g, int k, int alpha_floor) {
  const int n = g.order();
  const int N = col.order();
  ensure(k >= 1, "spanning embedding: k must be at least 1");
  ensure(g.connected(), "spanning embedding: pattern is disconnected");
  ensure(N >= n, "spanning embedding: host order below the pattern order");
  if (k == 1) return all_red_or_blue_edge(col, g);
  ensure(static_cast<long long>(n) >= 6LL * k * k * k,
         "spanning embedding: pattern order below 6k^3");
  ensure(g.size() * (24LL * k - 12) <= static_cast<long long>(n) * (24LL * k - 11),
         "spanning embedding: pattern exceeds e <= n(1 + 1/(24k-12))");
  ensure(alpha_floor >= 0 && alpha_floor <= k - 1,
         "spanning embedding: independence floor out of range");
  ensure(N >= n + k - 1 - alpha_floor,
         "spanning embedding: host order below n + k - 1 - alpha'");

  if (auto path = find_suspended_path(g, 4 * k - 2))
    return spanning_case_path(col, g, k, *path);
  if (auto matching = find_end_edge_matching(g, 2 * k - 2))
    return spanning_case_matching(col, g, k, *matching);
  return spanning_case_star(col, g, k);
}

// ---- multistar machinery -------------------------------------------------

// Long suspended path at multistar scale: pack greedily first; a maximal
// short pack leaves a blue-star-free remainder where the shortened pattern
// embeds, and a stalled lengthening yields t disjoint blue stars outright.
Sub multistar_case_path(const TwoColoring& col, const Graph& g, int k, int t,
                        const std::vector<int>& path) {
  const int n = g.order();
  const int N = col.order();
  const int cut = (t - 1) * k;
  ShortenedPath sp = shorten_suspended_path(g, path, cut);
  const Graph& h = sp.h.graph;

  PackResult pr = pack_blue_stars(col, k, t);
  if (pr.reached_t) return sub_blue(col, pr.pack, k, "multistar path case");
  ColoringMap crem = restrict_coloring(col, ~pr.pack.vertex_set);
  ensure(crem.col.order() >= h.order(),
         "multistar path case: unpacked remainder smaller than the shortened pattern");
  // the surviving route keeps >= 2tk vertices whose closed neighborhoods
  // meet it in at most 3 vertices, so the remainder's local independence
  // stays at least k - 1; certified before use
  ensure(alpha_prime_at_least(h, k - 1),
         "multistar path case: shortened pattern lost the k - 1 independence floor");
  Sub inner = embed_spanning_inner(crem.col, h, k, k - 1);
  ensure(inner.red(),
         "multistar path case: a blue star among unpacked vertices contradicts greedy maximality");

  std::vector<int> phi(n, -1);
  Bitset used(N);
  for (int i = 0; i < h.order(); ++i) {
    phi[sp.h.to_original[i]] = crem.to_original[(*inner.phi)[i]];
    used.set(phi[sp.h.to_original[i]]);
  }
  std::vector<int> seq;
  seq.reserve(path.size());
  for (int v : sp.route) seq.push_back(phi[v]);
  for (int step = 0; step < cut; ++step) {
    if (!lengthen_once(col, used, seq)) {
      // every unused vertex is blue into half of the >= 2tk route images:
      // t of them center disjoint blue stars with route-image leaves
      Bitset avail = ~used;
      std::vector<BlueStar> stars;
      Bitset seqmask = mask_of(N, seq);
      auto c = avail.find_first();
      for (int i = 0; i < t; ++i) {
        ensure(c != Bitset::npos, "multistar path case: fewer unused vertices than stars");
        auto star = blue_star_at(col, static_cast<int>(c), k, seqmask);
        ensure(star.has_value(),
               "multistar path case: a stalled vertex lacks k unclaimed blue route neighbors");
        for (int l : star->leaves) seqmask.reset(l);
        stars.push_back(std::move(*star));
        c = avail.find_next(c);
      }
      return sub_blue(col, make_pack(N, std::move(stars)), k, "multistar path case");
    }
  }
  for (size_t i = 0; i < path.size(); ++i) phi[path[i]] = seq[i];
  check_phi(col, g, phi, "multistar path case");
  return sub_red(std::move(phi));
}

// End-edge matching at multistar scale, on top of an inductive pack of
// t - 1 disjoint blue stars.
Sub multistar_case_matching(const TwoColoring& col, const Graph& g, int k, int t,
                            std::vector<std::pair<int, int>> matching, const StarPack& A) {
  const int n = g.order();
  const int N = col.order();
  const int s = 2 * t * k - 2;
  ensure(static_cast<int>(matching.size()) >= s, "multistar matching case: too few end edges");
  matching.resize(s);
  std::vector<int> drop;
  drop.reserve(s);
  for (const auto& [leaf, sup] : matching) drop.push_back(leaf);
  VertexMap rem = delete_vertices(g, drop);
  ColoringMap cs = restrict_coloring(col, ~A.vertex_set);
  ensure(cs.col.order() >= rem.graph.order() + k - 1,
         "multistar matching case: packed vertices crowd out the trimmed pattern");
  Sub inner = embed_spanning_inner(cs.col, rem.graph, k, 0);
  if (!inner.red()) {
    StarPack fresh = translate_pack(*inner.pack, cs.to_original, N);
    return sub_blue_joined(col, A, std::move(fresh.stars), k, "multistar matching case");
  }

  std::vector<int> phi(n, -1);
  Bitset used(N);
  for (int i = 0; i < rem.graph.order(); ++i) {
    phi[rem.to_original[i]] = cs.to_original[(*inner.phi)[i]];
    used.set(phi[rem.to_original[i]]);
  }
  std::vector<int> X;
  X.reserve(s);
  for (const auto& [leaf, sup] : matching) X.push_back(phi[sup]);
  std::vector<int> Y = bits(~used);
  ensure(static_cast<int>(Y.size()) >= s,
         "multistar matching case: fewer unused vertices than leaves");

  MatchingOutcome out = red_matching_or_blue_biclique(col, X, Y);
  ensure(verify_matching_outcome(col, X, Y, out),
         "multistar matching case: outcome failed verification");
  if (out.kind == MatchingOutcomeKind::RedMatching) {
    ensure(out.matching.size() == X.size(),
           "multistar matching case: red matching does not cover X");
    for (const auto& [hx, hy] : out.matching) {
      int idx = -1;
      for (int i = 0; i < s; ++i)
        if (X[i] == hx && phi[matching[i].first] < 0) {
          idx = i;
          break;
        }
      ensure(idx >= 0, "multistar matching case: matched endpoint outside X");
      phi[matching[idx].first] = hy;
      used.set(hy);
    }
    check_phi(col, g, phi, "multistar matching case");
    return sub_red(std::move(phi));
  }
  // blue biclique: either one fresh star avoids the pack, or the biclique
  // is big enough to carry t disjoint stars on its own
  std::vector<int> y_outside;
  for (int y : out.y_side)
    if (!A.vertex_set.test(y)) y_outside.push_back(y);
  if (static_cast<int>(y_outside.size()) >= k) {
    BlueStar star{out.x_side.front(),
                  std::vector<int>(y_outside.begin(), y_outside.begin() + k)};
    return sub_blue_joined(col, A, {star}, k, "multistar matching case");
  }
  ensure(static_cast<int>(out.x_side.size()) >= t * k,
         "multistar matching case: biclique narrower than tk despite the counting bound");
  ensure(static_cast<int>(out.y_side.size()) >= t,
         "multistar matching case: biclique far side below t");
  std::vector<BlueStar> stars;
  for (int i = 0; i < t; ++i) {
    BlueStar star{out.y_side[i],
                  std::vector<int>(out.x_side.begin() + static_cast<long>(i) * k,
                                   out.x_side.begin() + static_cast<long>(i + 1) * k)};
    stars.push_back(std::move(star));
  }
  return sub_blue(col, make_pack(N, std::move(stars)), k, "multistar matching case");
}

// No unpacked vertex sends (t-1)k red edges into the pack, so blue edges
// flood some packed star: two of its members center disjoint fresh stars
// among the unpacked vertices, upgrading the pack from t - 1 to t stars.
Sub upgrade_pack(const TwoColoring& col, int k, int t, const StarPack& A, const Bitset& sset) {
  for (size_t si = 0; si < A.stars.size(); ++si) {
    std::vector<int> members{A.stars[si].center};
    members.insert(members.end(), A.stars[si].leaves.begin(), A.stars[si].leaves.end());
    std::sort(members.begin(), members.end());
    std::vector<std::pair<int, Bitset>> cand;
    for (int m : members) {
      Bitset bs = col.blue_row(m) & sset;
      if (static_cast<int>(bs.count()) >= 2 * k - 1) cand.emplace_back(m, std::move(bs));
    }
    for (size_t i = 0; i < cand.size(); ++i) {
      for (size_t j = 0; j < cand.size(); ++j) {
        if (i == j) continue;
        const auto& [a, ba] = cand[i];
        const auto& [a2, ba2] = cand[j];
        // a's leaves prefer vertices a2 cannot use, then fill
        std::vector<int> la;
        for (int x : bits(ba & ~ba2)) {
          if (static_cast<int>(la.size()) == k) break;
          la.push_back(x);
        }
        for (int x : bits(ba & ba2)) {
          if (static_cast<int>(la.size()) == k) break;
          la.push_back(x);
        }
        if (static_cast<int>(la.size()) < k) continue;
        Bitset taken = mask_of(col.order(), la);
        std::vector<int> la2;
        for (int x : bits(ba2 & ~taken)) {
          if (static_cast<int>(la2.size()) == k) break;
          la2.push_back(x);
        }
        if (static_cast<int>(la2.size()) < k) continue;
        std::sort(la.begin(), la.end());
        std::vector<BlueStar> stars = A.stars;
        stars[si] = BlueStar{a, std::move(la)};
        stars.push_back(BlueStar{a2, std::move(la2)});
        return sub_blue(col, make_pack(col.order(), std::move(stars)), k, "pack upgrade");
      }
    }
  }
  throw std::logic_error(
      "pack upgrade: no unpacked claimant and no splittable packed star, "
      "contradicting the counting argument");
}

// Star-like remainder at multistar scale, on top of the inductive pack.
Sub multistar_case_star(const TwoColoring& col, const Graph& g, int k, int t, int alpha_floor,
                        const StarPack& A) {
  const int n = g.order();
  const int N = col.order();
  const int dsz = (t - 1) * k + k * k - 2 * k + 2;
  auto [v, leaves] = max_pendant_center(g);
  ensure(static_cast<int>(leaves.size()) >= dsz,
         "multistar star case: too few pendant leaves at the best center");
  Bitset sset = ~A.vertex_set;

  // a claimant: an unpacked vertex with (t-1)k red edges into the pack
  int x = -1;
  for (auto c = sset.find_first(); c != Bitset::npos; c = sset.find_next(c)) {
    if (static_cast<long long>((col.red_row(static_cast<int>(c)) & A.vertex_set).count()) >=
        static_cast<long long>(t - 1) * k) {
      x = static_cast<int>(c);
      break;
    }
  }
  if (x < 0) return upgrade_pack(col, k, t, A, sset);

  std::vector<int> B = bits(col.blue_row(x) & sset);
  if (static_cast<int>(B.size()) >= k)
    return sub_blue_joined(col, A,
                           {BlueStar{x, std::vector<int>(B.begin(), B.begin() + k)}}, k,
                           "multistar star case");
  for (int b : B) {
    auto star = blue_star_at(col, b, k, sset);
    if (star.has_value())
      return sub_blue_joined(col, A, {std::move(*star)}, k, "multistar star case");
  }
  // unpacked red neighbors of x that are red to all of B
  Bitset U = col.red_row(x) & sset;
  for (int b : B) U &= col.red_row(b);
  ensure(static_cast<long long>(U.count()) >=
             static_cast<long long>(sset.count()) - (k * k - 2 * k + 2),
         "multistar star case: common red neighborhood below the counting bound");

  std::vector<int> D(leaves.begin(), leaves.begin() + dsz);
  VertexMap rem = delete_vertices(g, D);
  std::vector<int> g2rem(n, -1);
  for (int i = 0; i < rem.graph.order(); ++i) g2rem[rem.to_original[i]] = i;
  check_local_deletion_unchanged(g, v, rem, g2rem[v]);
  // the surviving pendant leaves keep the remainder's local independence at
  // the floor: any other closed neighborhood meets at most one of them
  if (alpha_floor > 0)
    ensure(static_cast<int>(leaves.size()) >= dsz + alpha_floor + 1,
           "multistar star case: not enough surviving leaves to preserve the independence floor");
  ensure(alpha_prime_at_least(rem.graph, alpha_floor),
         "multistar star case: trimmed pattern lost the independence floor");
  ColoringMap cu = restrict_coloring(col, U);
  ensure(cu.col.order() >= rem.graph.order() + k - 1 - alpha_floor,
         "multistar star case: claimant neighborhood below the trimmed host requirement");
  Sub inner = embed_spanning_inner(cu.col, rem.graph, k, alpha_floor);
  if (!inner.red()) {
    StarPack fresh = translate_pack(*inner.pack, cu.to_original, N);
    return sub_blue_joined(col, A, std::move(fresh.stars), k, "multistar star case");
  }

  std::vector<int> phi(n, -1);
  Bitset used(N);
  for (int i = 0; i < rem.graph.order(); ++i) {
    phi[rem.to_original[i]] = cu.to_original[(*inner.phi)[i]];
    used.set(phi[rem.to_original[i]]);
  }
  used.reset(phi[v]);
  phi[v] = x;
  used.set(x);
  if (!B.empty()) {
    VertexMap gv = local_deleted_graph(g, v);
    std::vector<int> I = independent_set_up_to(gv.graph, static_cast<int>(B.size()));
    for (size_t j = 0; j < I.size(); ++j) {
      int pat = gv.to_original[I[j]];
      used.reset(phi[pat]);
      phi[pat] = B[j];
      used.set(B[j]);
    }
  }
  Bitset pool = col.red_row(x) & ~used;
  ensure(static_cast<int>(pool.count()) >= dsz,
         "multistar star case: pendant pool below the deletion size");
  attach_pendants(phi, used, D, pool, "multistar star case");
  check_phi(col, g, phi, "multistar star case");
  return sub_red(std::move(phi));
}

Sub embed_multistar_inner(const TwoColoring& col, const Graph& g, int k, int t,
                          int alpha_floor) {
  const int n = g.order();
  const int N = col.order();
  ensure(t >= 2, "multistar embedding: t must be at least 2 here");
  ensure(g.connected(), "multistar embedding: pattern is disconnected");
  ensure(static_cast<long long>(n) >= 28LL * t * t * k * k * k,
         "multistar embedding: pattern order below 28 t^2 k^3");
  ensure(g.size() * (21LL * t * k - 3 * k + 6) <=
             static_cast<long long>(n) * (21LL * t * k - 3 * k + 7),
         "multistar embedding: pattern exceeds e <= n(1 + 1/(21tk-3k+6))");
  ensure(alpha_floor >= 0 && alpha_floor <= k - 1,
         "multistar embedding: independence floor out of range");
  ensure(N >= n + t - 1 && N >= n + k - 1 - alpha_floor + t - 1,
         "multistar embedding: host order below the guarantee threshold");

  // induction on t: a red copy settles everything, a blue (t-1)-pack feeds
  // the case analysis
  Sub first = (t == 2) ? embed_spanning_inner(col, g, k, alpha_floor)
                       : embed_multistar_inner(col, g, k, t - 1, alpha_floor);
  if (first.red()) return first;
  const StarPack& A = *first.pack;
  ensure(static_cast<int>(A.stars.size()) == t - 1,
         "multistar embedding: inductive pack has the wrong star count");

  if (auto path = find_suspended_path(g, (3 * t - 1) * k))
    return multistar_case_path(col, g, k, t, *path);
  if (auto matching = find_end_edge_matching(g, 2 * t * k - 2))
    return multistar_case_matching(col, g, k, t, *matching, A);
  return multistar_case_star(col, g, k, t, alpha_floor, A);
}

EmbedResult finish(const TwoColoring& col, const Graph& g, int k, Sub sub, int expected_stars) {
  if (sub.red()) return EmbedResult::red(Embedding{g, col, std::move(*sub.phi)});
  ensure(static_cast<int>(sub.pack->stars.size()) == expected_stars,
         "blue certificate carries the wrong number of stars");
  return EmbedResult::blue(col, std::move(*sub.pack), k);
}

}  // namespace

bool verify_embedding(const Embedding& e) { return phi_ok(e.host, e.pattern, e.map); }

EmbedResult EmbedResult::red(Embedding e) {
  ensure(verify_embedding(e), "red certificate failed verification");
  return EmbedResult(std::variant<Embedding, StarPack>(std::move(e)));
}

EmbedResult EmbedResult::blue(const TwoColoring& col, StarPack pack, int k) {
  ensure(verify_star_pack(col, pack, k), "blue certificate failed verification");
  return EmbedResult(std::variant<Embedding, StarPack>(std::move(pack)));
}

EmbedResult embed_tree(const TwoColoring& col, const Graph& tree, int k) {
  require(k >= 1, "embed_tree: k must be at least 1");
  require(tree.order() >= 1 && tree.is_tree(), "embed_tree: pattern is not a tree");
  require(col.order() >= tree.order() + k - 1, "embed_tree: host order below |T| + k - 1");
  return finish(col, tree, k, embed_tree_inner(col, tree, k), 1);
}

EmbedResult embed_minus_vertex(const TwoColoring& col, const Graph& g, int u, int k) {
  require(k >= 1, "embed_minus_vertex: k must be at least 1");
  require(g.order() >= 1, "embed_minus_vertex: empty pattern");
  require(u >= 0 && u < g.order(), "embed_minus_vertex: vertex out of range");
  VertexMap rem = delete_vertices(g, {u});
  int required_sub;
  if (rem.graph.is_forest()) {
    required_sub = (g.order() - 1) + (k - 1);
  } else {
    require(rem.graph.connected(),
            "embed_minus_vertex: remainder is neither a forest nor connected");
    require(sparsity_check(rem.graph, k, 1).sparse_embed_ok,
            "embed_minus_vertex: remainder exceeds e <= n(1 + 1/(2k+1))");
    required_sub = (g.order() - 1) + (2 * k - 2);
  }
  require(col.order() >= required_sub + k,
          "embed_minus_vertex: host order below the recursion requirement");
  return finish(col, g, k, embed_minus_vertex_inner(col, g, u, k), 1);
}

EmbedResult embed_sparse(const TwoColoring& col, const Graph& g, int k) {
  require(k >= 1, "embed_sparse: k must be at least 1");
  require(g.order() >= 1 && g.connected(), "embed_sparse: pattern must be connected");
  require(sparsity_check(g, k, 1).sparse_embed_ok,
          "embed_sparse: pattern exceeds e <= n(1 + 1/(2k+1))");
  require(col.order() >= g.order() + 2 * k - 2,
          "embed_sparse: host order below n + 2k - 2");
  return finish(col, g, k, embed_sparse_inner(col, g, k), 1);
}

EmbedResult embed_spanning(const TwoColoring& col, const Graph& g, int k) {
  require(k >= 1, "embed_spanning: k must be at least 1");
  require(g.order() >= 1 && g.connected(), "embed_spanning: pattern must be connected");
  require(static_cast<long long>(g.order()) >= 6LL * k * k * k,
          "embed_spanning: pattern order below 6k^3");
  require(sparsity_check(g, k, 1).star_ok,
          "embed_spanning: pattern exceeds e <= n(1 + 1/(24k-12))");
  require(col.order() >= g.order(), "embed_spanning: host order below the pattern order");
  int m_req = std::max(0, g.order() + k - 1 - col.order());
  if (m_req > 0)
    require(alpha_prime_at_least(g, m_req),
            "embed_spanning: host order below n + k - 1 - alpha'");
  return finish(col, g, k, embed_spanning_inner(col, g, k, m_req), 1);
}

EmbedResult embed_vs_multistar(const TwoColoring& col, const Graph& g, int k, int t) {
  require(k >= 1, "embed_vs_multistar: k must be at least 1");
  require(t >= 1, "embed_vs_multistar: t must be at least 1");
  if (t == 1) return embed_spanning(col, g, k);
  require(g.order() >= 1 && g.connected(), "embed_vs_multistar: pattern must be connected");
  require(static_cast<long long>(g.order()) >= 28LL * t * t * k * k * k,
          "embed_vs_multistar: pattern order below 28 t^2 k^3");
  require(sparsity_check(g, k, t).multistar_ok,
          "embed_vs_multistar: pattern exceeds e <= n(1 + 1/(21tk-3k+6))");
  require(col.order() >= g.order() + t - 1,
          "embed_vs_multistar: host order below n + t - 1");
  int m_req = std::max(0, g.order() + k - 1 + t - 1 - col.order());
  if (m_req > 0)
    require(alpha_prime_at_least(g, m_req),
            "embed_vs_multistar: host order below n + k - 1 - alpha' + t - 1");
  return finish(col, g, k, embed_multistar_inner(col, g, k, t, m_req), t);
}

}  // namespace starspan
