#include "para/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "para/rng.hpp"

namespace para {

namespace {

u64 edge_key(int n, int a, int b) {
  return static_cast<u64>(a) * static_cast<u64>(n) + static_cast<u64>(b);
}

}  // namespace

WeightedGraph gen_graph(int n, int deg_lo, int deg_hi, i64 w_lo, i64 w_hi, u64 seed,
                        bool undirected) {
  if (n < 2) throw std::invalid_argument("gen_graph: n must be >= 2");
  if (deg_lo < 1 || deg_lo > deg_hi) throw std::invalid_argument("gen_graph: bad degree range");
  if (deg_hi >= n) throw std::invalid_argument("gen_graph: deg_hi must be < n");
  if (w_lo < 1 || w_lo > w_hi || w_hi > kMaxFinite)
    throw std::invalid_argument("gen_graph: bad weight range");
  if (undirected && n > 2 && deg_hi < 2)
    throw std::invalid_argument("gen_graph: connected graph needs deg_hi >= 2");

  SplitMix64 rng(seed);
  WeightedGraph g;
  g.n = n;
  g.undirected = undirected;
  g.adj.resize(n);
  g.w.resize(n);

  std::unordered_set<u64> edges;
  edges.reserve(static_cast<size_t>(n) * std::max(2, deg_lo));

  auto has_edge = [&](int a, int b) {
    if (undirected && a > b) std::swap(a, b);
    return edges.count(edge_key(n, a, b)) != 0;
  };
  auto add_edge = [&](int a, int b) {
    const i64 weight = rng.next_in(w_lo, w_hi);
    int u = a, v = b;
    if (undirected && u > v) std::swap(u, v);
    edges.insert(edge_key(n, u, v));
    g.adj[a].push_back(b);
    g.w[a].push_back(weight);
    if (undirected) {
      g.adj[b].push_back(a);
      g.w[b].push_back(weight);
    }
  };

  // Spanning-cycle backbone over a random vertex order.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_below(static_cast<u64>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  if (n == 2) {
    add_edge(perm[0], perm[1]);
  } else {
    for (int i = 0; i < n; ++i) add_edge(perm[i], perm[(i + 1) % n]);
  }

  auto out_deg = [&](int v) { return static_cast<int>(g.adj[v].size()); };
  auto partner_full = [&](int v) {
    // For undirected graphs new edges raise both endpoint degrees.
    return undirected && out_deg(v) >= deg_hi;
  };
  auto remove_edge = [&](int a, int b) {
    int u = a, v = b;
    if (undirected && u > v) std::swap(u, v);
    edges.erase(edge_key(n, u, v));
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      for (size_t k = 0; k < g.adj[x].size(); ++k)
        if (g.adj[x][k] == y) {
          g.adj[x].erase(g.adj[x].begin() + k);
          g.w[x].erase(g.w[x].begin() + k);
          break;
        }
      if (!undirected) break;
    }
  };
  // When every non-neighbor of u already sits at deg_hi, rewire instead:
  // drop an edge (a,b) between two non-neighbors and reconnect both
  // endpoints through u. Degrees of a and b are unchanged, u gains 2, and
  // the new path a-u-b keeps the graph connected.
  auto rewire = [&](int u) {
    if (out_deg(u) + 2 > deg_hi) return false;
    const int start = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    for (int off = 0; off < n; ++off) {
      const int a = (start + off) % n;
      if (a == u || has_edge(u, a)) continue;
      for (size_t k = 0; k < g.adj[a].size(); ++k) {
        const int b = g.adj[a][k];
        if (b == u || has_edge(u, b)) continue;
        remove_edge(a, b);
        add_edge(u, a);
        add_edge(u, b);
        return true;
      }
    }
    return false;
  };

  // Random extra edges until every degree reaches deg_lo.
  for (int u = 0; u < n; ++u) {
    while (out_deg(u) < deg_lo) {
      int v = -1;
      for (int attempt = 0; attempt < 64 && v < 0; ++attempt) {
        const int cand = static_cast<int>(rng.next_below(static_cast<u64>(n)));
        if (cand != u && !partner_full(cand) && !has_edge(u, cand)) v = cand;
      }
      if (v < 0) {
        // Fall back to a scan from a random start before trying to rewire.
        const int start = static_cast<int>(rng.next_below(static_cast<u64>(n)));
        for (int off = 0; off < n; ++off) {
          const int cand = (start + off) % n;
          if (cand != u && !partner_full(cand) && !has_edge(u, cand)) {
            v = cand;
            break;
          }
        }
      }
      if (v >= 0) {
        add_edge(u, v);
        continue;
      }
      if (!undirected || !rewire(u))
        throw std::invalid_argument("gen_graph: degree range infeasible for n=" +
                                    std::to_string(n));
    }
  }

  g.deg.resize(n);
  for (int i = 0; i < n; ++i) g.deg[i] = out_deg(i);
  return g;
}

Sequence gen_sequence(i64 count, i64 lo, i64 hi, u64 seed) {
  if (count < 0) throw std::invalid_argument("gen_sequence: negative count");
  if (lo > hi) throw std::invalid_argument("gen_sequence: bad value range");
  SplitMix64 rng(seed);
  Sequence s;
  s.items.reserve(static_cast<size_t>(count));
  for (i64 i = 0; i < count; ++i) s.items.push_back(rng.next_in(lo, hi));
  return s;
}

KnapsackInstance gen_knapsack(int n, i64 w_max, i64 v_max, i64 capacity, u64 seed) {
  if (n < 0) throw std::invalid_argument("gen_knapsack: negative n");
  if (w_max < 1 || v_max < 1) throw std::invalid_argument("gen_knapsack: max values must be >= 1");
  if (capacity < 0) throw std::invalid_argument("gen_knapsack: negative capacity");
  SplitMix64 rng(seed);
  KnapsackInstance inst;
  inst.capacity = capacity;
  inst.v.reserve(n);
  inst.w.reserve(n);
  for (int i = 0; i < n; ++i) {
    inst.v.push_back(rng.next_in(1, v_max));
    inst.w.push_back(rng.next_in(1, w_max));
  }
  return inst;
}

DenseMatrix to_dense(const WeightedGraph& g) {
  DenseMatrix m = DenseMatrix::filled(g.n, kInf);
  for (int i = 0; i < g.n; ++i) m.at(i, i) = 0;
  for (int i = 0; i < g.n; ++i) {
    for (size_t k = 0; k < g.adj[i].size(); ++k) {
      const int j = g.adj[i][k];
      m.at(i, j) = std::min(m.at(i, j), g.w[i][k]);
    }
  }
  return m;
}

FloodingInstance make_flooding(const WeightedGraph& g, std::vector<i64> ceiling) {
  if (static_cast<int>(ceiling.size()) != g.n)
    throw std::invalid_argument("make_flooding: ceiling size mismatch");
  for (i64 c : ceiling)
    if (c < 0 || c > kMaxFinite) throw std::invalid_argument("make_flooding: ceiling not finite");
  // Unlike distance matrices the diagonal is kInf: a vertex has no
  // self-edge, and max(kInf, tau) must stay neutral under min.
  DenseMatrix v = DenseMatrix::filled(g.n, kInf);
  for (int i = 0; i < g.n; ++i)
    for (size_t k = 0; k < g.adj[i].size(); ++k) {
      const int j = g.adj[i][k];
      v.at(i, j) = std::min(v.at(i, j), g.w[i][k]);
      v.at(j, i) = std::min(v.at(j, i), g.w[i][k]);
    }
  return FloodingInstance{std::move(v), std::move(ceiling)};
}

bool graph_connected(const WeightedGraph& g) {
  if (g.n == 0) return true;
  auto reach_all = [&](auto&& neighbors) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == g.n;
  };
  if (!reach_all([&](int u) -> const std::vector<int>& { return g.adj[u]; })) return false;
  if (g.undirected) return true;
  std::vector<std::vector<int>> radj(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) radj[v].push_back(u);
  return reach_all([&](int u) -> const std::vector<int>& { return radj[u]; });
}

}  // namespace para
