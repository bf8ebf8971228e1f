#include "starspan/alpha.hpp"

#include <stdexcept>
#include <vector>

namespace starspan {
namespace {

struct MisSolver {
  const Graph& g;
  int n;
  int best = -1;
  Bitset best_set;

  explicit MisSolver(const Graph& gg) : g(gg), n(gg.order()), best_set(gg.order()) {}

  // Size of a greedy maximal matching inside `avail`; alive_count - matching
  // bounds the independent set from above.
  int matching_bound(Bitset avail) const {
    int m = 0;
    for (auto u = avail.find_first(); u != Bitset::npos; u = avail.find_first()) {
      avail.reset(u);
      Bitset nb = g.row(static_cast<int>(u)) & avail;
      auto w = nb.find_first();
      if (w != Bitset::npos) {
        avail.reset(w);
        ++m;
      }
    }
    return m;
  }

  void solve(Bitset alive, Bitset chosen) {
    // Isolated and pendant vertices are always safe to take.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v)) {
        Bitset nb = g.row(static_cast<int>(v)) & alive;
        size_t d = nb.count();
        if (d == 0) {
          chosen.set(v);
          alive.reset(v);
          changed = true;
        } else if (d == 1) {
          chosen.set(v);
          alive.reset(v);
          alive.reset(nb.find_first());
          changed = true;
        }
      }
    }

    int cnt = static_cast<int>(chosen.count());
    if (alive.none()) {
      if (cnt > best) {
        best = cnt;
        best_set = chosen;
      }
      return;
    }

    if (cnt + static_cast<int>(alive.count()) - matching_bound(alive) <= best) return;

    // Every remaining vertex has degree >= 2 inside alive.
    int maxdeg = 0, branch_v = -1;
    for (auto v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v)) {
      int d = static_cast<int>((g.row(static_cast<int>(v)) & alive).count());
      if (d > maxdeg) {
        maxdeg = d;
        branch_v = static_cast<int>(v);
      }
    }

    if (maxdeg == 2) {
      // Disjoint cycles: take alternating vertices, floor(len/2) per cycle.
      Bitset rem = alive;
      for (auto s = rem.find_first(); s != Bitset::npos; s = rem.find_first()) {
        std::vector<int> cyc;
        int cur = static_cast<int>(s);
        while (cur >= 0) {
          cyc.push_back(cur);
          rem.reset(cur);
          Bitset nb = g.row(cur) & alive & rem;
          auto w = nb.find_first();
          cur = (w == Bitset::npos) ? -1 : static_cast<int>(w);
        }
        int take = static_cast<int>(cyc.size()) / 2;
        for (int i = 0; i < 2 * take; i += 2) chosen.set(cyc[i]);
      }
      int c2 = static_cast<int>(chosen.count());
      if (c2 > best) {
        best = c2;
        best_set = chosen;
      }
      return;
    }

    {
      Bitset a2 = alive;
      a2.reset(branch_v);
      a2 -= g.row(branch_v);
      Bitset c2 = chosen;
      c2.set(branch_v);
      solve(a2, c2);
    }
    {
      Bitset a2 = alive;
      a2.reset(branch_v);
      solve(a2, chosen);
    }
  }
};

MisSolver run_solver(const Graph& g, const Bitset& alive) {
  if (static_cast<int>(alive.size()) != g.order())
    throw std::invalid_argument("independence search: alive mask size mismatch");
  MisSolver s(g);
  s.solve(alive, Bitset(g.order()));
  return s;
}

}  // namespace

int independence_number_within(const Graph& g, const Bitset& alive) {
  return run_solver(g, alive).best;
}

std::vector<int> maximum_independent_set_within(const Graph& g, const Bitset& alive) {
  return bits(run_solver(g, alive).best_set);
}

int independence_number(const Graph& g) {
  Bitset all(g.order());
  all.set();
  return independence_number_within(g, all);
}

std::vector<int> maximum_independent_set(const Graph& g) {
  Bitset all(g.order());
  all.set();
  return maximum_independent_set_within(g, all);
}

AlphaPrimeReport alpha_prime(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("alpha_prime: graph must have at least one vertex");
  AlphaPrimeReport rep;
  rep.per_vertex_alpha.resize(n);
  rep.alpha_prime = n + 1;
  for (int v = 0; v < n; ++v) {
    Bitset alive(n);
    alive.set();
    alive.reset(v);
    alive -= g.row(v);
    int a = independence_number_within(g, alive);
    rep.per_vertex_alpha[v] = a;
    if (a < rep.alpha_prime) {
      rep.alpha_prime = a;
      rep.witness_vertex = v;
    }
  }
  return rep;
}

}  // namespace starspan
