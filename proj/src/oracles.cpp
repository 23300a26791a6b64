#include "para/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace para::oracle {

namespace {

void knapsack_dfs(const KnapsackInstance& inst, int i, i64 weight_left, i64 value, i64& best) {
  if (value > best) best = value;
  for (; i < inst.n(); ++i) {
    if (inst.w[i] <= weight_left)
      knapsack_dfs(inst, i + 1, weight_left - inst.w[i], value + inst.v[i], best);
  }
}

}  // namespace

i64 knapsack_exhaustive(const KnapsackInstance& inst) {
  if (inst.n() > 24) throw std::invalid_argument("knapsack_exhaustive: n > 24");
  i64 best = 0;
  knapsack_dfs(inst, 0, inst.capacity, 0, best);
  return best;
}

std::vector<i64> bellman_ford(const WeightedGraph& g, int source) {
  if (source < 0 || source >= g.n) throw std::out_of_range("bellman_ford: source out of range");
  std::vector<i64> d(g.n, kInf);
  d[source] = 0;
  for (int round = 1; round < g.n; ++round) {
    bool changed = false;
    for (int u = 0; u < g.n; ++u) {
      if (is_inf(d[u])) continue;
      for (size_t k = 0; k < g.adj[u].size(); ++k) {
        const i64 alt = sat_add(d[u], g.w[u][k]);
        if (alt < d[g.adj[u][k]]) {
          d[g.adj[u][k]] = alt;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return d;
}

KruskalResult kruskal_weight(const WeightedGraph& g) {
  struct Edge {
    i64 w;
    int a, b;
  };
  std::vector<Edge> edges;
  for (int u = 0; u < g.n; ++u)
    for (size_t k = 0; k < g.adj[u].size(); ++k) {
      const int v = g.adj[u][k];
      if (u < v) edges.push_back({g.w[u][k], u, v});
    }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.w, x.a, x.b) < std::tie(y.w, y.a, y.b);
  });

  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  KruskalResult res;
  int joined = 0;
  for (const Edge& e : edges) {
    const int ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    parent[ra] = rb;
    res.total += e.w;
    ++joined;
  }
  res.connected = (g.n == 0) || (joined == g.n - 1);
  return res;
}

namespace {

i64 lcs_rec(const Sequence& s, const Sequence& t, i64 i, i64 j) {
  if (i == 0 || j == 0) return 0;
  if (s.items[i - 1] == t.items[j - 1]) return lcs_rec(s, t, i - 1, j - 1) + 1;
  return std::max(lcs_rec(s, t, i - 1, j), lcs_rec(s, t, i, j - 1));
}

}  // namespace

i64 lcs_exhaustive(const Sequence& s, const Sequence& t) {
  if (s.n() > 14 || t.n() > 14) throw std::invalid_argument("lcs_exhaustive: length > 14");
  return lcs_rec(s, t, s.n(), t.n());
}

i64 lis_exhaustive(const Sequence& a) {
  const int n = static_cast<int>(a.n());
  if (n > 18) throw std::invalid_argument("lis_exhaustive: n > 18");
  i64 best = 0;
  for (u64 mask = 1; mask < (u64{1} << n); ++mask) {
    i64 len = 0;
    i64 last = 0;
    bool increasing = true;
    for (int i = 0; i < n && increasing; ++i) {
      if (!(mask & (u64{1} << i))) continue;
      if (len > 0 && a.items[i] <= last) increasing = false;
      last = a.items[i];
      ++len;
    }
    if (increasing && len > best) best = len;
  }
  return best;
}

bool flood_fixpoint_check(const FloodingInstance& inst, const std::vector<i64>& tau) {
  const int n = inst.n();
  if (static_cast<int>(tau.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (tau[i] > inst.ceiling[i]) return false;
    i64 expect = inst.ceiling[i];
    for (int j = 0; j < n; ++j)
      expect = std::min(expect, std::max(inst.valuation.at(i, j), tau[j]));
    if (tau[i] != expect) return false;
  }
  return true;
}

}  // namespace para::oracle
