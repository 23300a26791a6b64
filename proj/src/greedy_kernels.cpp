#include "para/greedy_kernels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "para/parallel.hpp"

namespace para::greedy {

namespace {

GreedyState init_state(int n) {
  GreedyState st;
  st.nd.resize(n);
  std::iota(st.nd.begin(), st.nd.end(), 0);
  st.d.assign(n, kInf);
  st.sel.assign(n, 0);
  return st;
}

// Runs the neighborhood update of the selected vertex k. The worker count
// follows the degree unless the policy pins the update to
// one thread.
template <class Relax>
void update_neighbors(const WeightedGraph& g, int k, const ExecPolicy& pol, Relax&& relax) {
  const auto& nbr = g.adj[k];
  const auto& wt = g.w[k];
  const i64 deg = static_cast<i64>(nbr.size());
  ExecPolicy up = pol;
  if (pol.parallel())
    up.workers = pol.parallel_update ? adaptive_workers(deg, pol) : 1;
  par_for(0, deg, up, [&](i64 j) { relax(nbr[j], wt[j]); });
}

}  // namespace

// Below this frontier size the block scans run on the caller; the block
// geometry and reduction order are unchanged, so the result is too.
constexpr i64 kThreadedSelectCutoff = 4096;

i64 blocked_min_select(const GreedyState& state, i64 p, const ExecPolicy& pol) {
  const i64 n = static_cast<i64>(state.nd.size());
  if (p < 0 || p >= n) throw std::invalid_argument("blocked_min_select: empty frontier");
  const i64 frontier = n - p;
  const i64 b =
      std::clamp<i64>(pol.parallel() ? pol.effective_blocks() : 1, 1, frontier);
  const int* nd = state.nd.data();
  const i64* d = state.d.data();
  if (b == 1) {
    i64 k = p;
    for (i64 i = p + 1; i < n; ++i)
      if (d[nd[i]] < d[nd[k]]) k = i;
    return k;
  }
  const i64 q = frontier / b;
  std::vector<i64> ind(b), val(b);
  const ExecPolicy scan_pol = frontier >= kThreadedSelectCutoff ? pol : ExecPolicy::seq();
  par_for(0, b, scan_pol, [&](i64 j) {
    const i64 lo = p + j * q;
    const i64 hi = (j == b - 1) ? n : lo + q;
    i64 k = lo;
    for (i64 i = lo + 1; i < hi; ++i)
      if (d[nd[i]] < d[nd[k]]) k = i;
    ind[j] = k;
    val[j] = d[nd[k]];
  });
  i64 best = 0;
  for (i64 j = 1; j < b; ++j)
    if (val[j] < val[best]) best = j;
  return ind[best];
}

GreedyState dijkstra_state(const WeightedGraph& g, int source, const ExecPolicy& pol) {
  if (source < 0 || source >= g.n) throw std::out_of_range("dijkstra: source out of range");
  GreedyState st = init_state(g.n);
  st.d[source] = 0;
  for (i64 p = 0; p < g.n; ++p) {
    const i64 kpos = blocked_min_select(st, p, pol);
    std::swap(st.nd[kpos], st.nd[p]);
    const int k = st.nd[p];
    st.sel[k] = 1;
    const i64 dk = st.d[k];
    if (is_inf(dk)) continue;  // rest of the frontier is unreachable
    update_neighbors(g, k, pol, [&](int i, i64 w) {
      const i64 alt = sat_add(dk, w);
      if (!st.sel[i] && alt < st.d[i]) st.d[i] = alt;
    });
  }
  return st;
}

std::vector<i64> dijkstra(const WeightedGraph& g, int source, const ExecPolicy& pol) {
  return dijkstra_state(g, source, pol).d;
}

PrimResult prim(const WeightedGraph& g, const ExecPolicy& pol) {
  GreedyState st = init_state(g.n);
  st.parent.assign(g.n, -1);
  PrimResult res;
  res.connected = true;
  if (g.n == 0) return res;
  st.d[0] = 0;
  for (i64 p = 0; p < g.n; ++p) {
    const i64 kpos = blocked_min_select(st, p, pol);
    std::swap(st.nd[kpos], st.nd[p]);
    const int k = st.nd[p];
    if (is_inf(st.d[k])) {
      res.connected = false;  // no edge reaches the remaining vertices
      break;
    }
    st.sel[k] = 1;
    res.total += st.d[k];
    update_neighbors(g, k, pol, [&](int i, i64 w) {
      if (!st.sel[i] && w < st.d[i]) {
        st.d[i] = w;
        st.parent[i] = k;
      }
    });
  }
  res.parent = std::move(st.parent);
  return res;
}

GreedyState moore_dijkstra_flood_state(const WeightedGraph& g, const std::vector<i64>& ceiling,
                                       const ExecPolicy& pol) {
  if (static_cast<int>(ceiling.size()) != g.n)
    throw std::invalid_argument("moore_dijkstra_flood: ceiling size mismatch");
  GreedyState st = init_state(g.n);
  st.d = ceiling;
  for (i64 p = 0; p < g.n; ++p) {
    const i64 kpos = blocked_min_select(st, p, pol);
    std::swap(st.nd[kpos], st.nd[p]);
    const int k = st.nd[p];
    st.sel[k] = 1;
    const i64 tk = st.d[k];
    update_neighbors(g, k, pol, [&](int i, i64 w) {
      const i64 alt = std::max(tk, w);
      if (!st.sel[i] && alt < st.d[i]) st.d[i] = alt;
    });
  }
  return st;
}

std::vector<i64> moore_dijkstra_flood(const WeightedGraph& g, const std::vector<i64>& ceiling,
                                      const ExecPolicy& pol) {
  return moore_dijkstra_flood_state(g, ceiling, pol).d;
}

}  // namespace para::greedy
