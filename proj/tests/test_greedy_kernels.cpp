#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "para/dp_kernels.hpp"
#include "para/greedy_kernels.hpp"
#include "para/oracles.hpp"
#include "para/parallel.hpp"
#include "para/rng.hpp"

using namespace para;
using namespace para::greedy;

namespace {

WeightedGraph chain_graph() {
  WeightedGraph g;
  g.n = 3;
  g.adj = {{1}, {0, 2}, {1}};
  g.w = {{4}, {4, 3}, {3}};
  g.deg = {1, 2, 1};
  return g;
}

WeightedGraph edgeless_graph(int n) {
  WeightedGraph g;
  g.n = n;
  g.adj.resize(n);
  g.w.resize(n);
  g.deg.assign(n, 0);
  return g;
}

WeightedGraph random_graph(SplitMix64& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng.next_below(max_n - 1));
  if (n == 2) return gen_graph(2, 1, 1, 1, 50, rng.next());
  const int lo = 1 + static_cast<int>(rng.next_below(3));
  const int hi = std::min(n - 1, std::max(2, lo + 1 + static_cast<int>(rng.next_below(4))));
  return gen_graph(n, std::min(lo, hi), hi, 1, 50, rng.next());
}

const std::vector<ExecPolicy> kPolicies = {ExecPolicy::seq(), ExecPolicy::par(1),
                                           ExecPolicy::par(2), ExecPolicy::par(4),
                                           ExecPolicy::par(8)};

}  // namespace

TEST_CASE("blocked_min_select: single block is the plain scan") {
  GreedyState st;
  st.nd = {0, 1, 2, 3};
  st.d = {5, 3, 8, 1};
  CHECK(blocked_min_select(st, 0, ExecPolicy::seq()) == 3);
  CHECK(blocked_min_select(st, 0, ExecPolicy::par(1, 1)) == 3);
  CHECK(blocked_min_select(st, 0, ExecPolicy::par(4, 2)) == 3);
  CHECK(blocked_min_select(st, 2, ExecPolicy::par(4, 2)) == 3);
}

TEST_CASE("blocked_min_select: ties go to the earliest position") {
  GreedyState st;
  st.nd = {2, 0, 3, 1, 4};
  st.d.assign(5, 9);
  for (int b : {1, 2, 3, 5, 8}) {
    CHECK(blocked_min_select(st, 0, ExecPolicy::par(4, b)) == 0);
    CHECK(blocked_min_select(st, 3, ExecPolicy::par(4, b)) == 3);
  }
}

TEST_CASE("blocked_min_select: empty frontier is a usage error") {
  GreedyState st;
  st.nd = {0, 1};
  st.d = {1, 2};
  CHECK_THROWS_AS(blocked_min_select(st, 2, ExecPolicy::seq()), std::invalid_argument);
}

TEST_CASE("blocked_min_select: equals the first-min scan for many block counts") {
  SplitMix64 rng(401);
  for (int it = 0; it < 200; ++it) {
    const i64 n = 1 + static_cast<i64>(rng.next_below(120));
    GreedyState st;
    st.nd.resize(n);
    std::iota(st.nd.begin(), st.nd.end(), 0);
    for (i64 i = n - 1; i > 0; --i)
      std::swap(st.nd[i], st.nd[rng.next_below(static_cast<u64>(i) + 1)]);
    st.d.resize(n);
    for (auto& k : st.d) k = rng.next_in(0, 15);
    const i64 p = static_cast<i64>(rng.next_below(static_cast<u64>(n)));
    i64 expect = p;
    for (i64 i = p + 1; i < n; ++i)
      if (st.d[st.nd[i]] < st.d[st.nd[expect]]) expect = i;
    for (i64 b : {i64{1}, i64{2}, i64{3}, i64{8}, n - p})
      CHECK(blocked_min_select(st, p, ExecPolicy::par(4, static_cast<int>(b))) == expect);
  }
}

TEST_CASE("dijkstra: examples") {
  const auto lonely = edgeless_graph(3);
  CHECK(dijkstra(lonely, 0, ExecPolicy::par(2)) == std::vector<i64>{0, kInf, kInf});
  CHECK(dijkstra(chain_graph(), 0, ExecPolicy::seq()) == std::vector<i64>{0, 4, 7});
  CHECK(dijkstra(chain_graph(), 2, ExecPolicy::par(3)) == std::vector<i64>{7, 3, 0});
  CHECK_THROWS_AS(dijkstra(lonely, 3, ExecPolicy::seq()), std::out_of_range);
  CHECK_THROWS_AS(dijkstra(lonely, -1, ExecPolicy::seq()), std::out_of_range);
}

TEST_CASE("dijkstra: equals bellman-ford, invariant state across policies") {
  SplitMix64 rng(402);
  for (int it = 0; it < 40; ++it) {
    const auto g = random_graph(rng, 80);
    const int src = static_cast<int>(rng.next_below(static_cast<u64>(g.n)));
    const auto expect = oracle::bellman_ford(g, src);
    const auto ref_state = dijkstra_state(g, src, ExecPolicy::seq());
    CHECK(ref_state.d == expect);
    for (const auto& pol : kPolicies) CHECK(dijkstra_state(g, src, pol) == ref_state);
  }
}

TEST_CASE("dijkstra: selected keys are monotone nondecreasing") {
  SplitMix64 rng(403);
  for (int it = 0; it < 20; ++it) {
    const auto g = random_graph(rng, 60);
    const auto st = dijkstra_state(g, 0, ExecPolicy::par(4));
    for (int p = 1; p < g.n; ++p) CHECK(st.d[st.nd[p - 1]] <= st.d[st.nd[p]]);
  }
}

TEST_CASE("prim: examples") {
  WeightedGraph tri;
  tri.n = 3;
  tri.adj = {{1, 2}, {0, 2}, {0, 1}};
  tri.w = {{1, 3}, {1, 2}, {3, 2}};
  tri.deg = {2, 2, 2};
  for (const auto& pol : kPolicies) {
    const auto r = prim(tri, pol);
    CHECK(r.connected);
    CHECK(r.total == 3);
  }

  // a tree keeps every edge
  const auto chain = prim(chain_graph(), ExecPolicy::par(2));
  CHECK(chain.connected);
  CHECK(chain.total == 7);
  CHECK(chain.parent[0] == -1);

  const auto lonely = prim(edgeless_graph(3), ExecPolicy::seq());
  CHECK(!lonely.connected);
}

TEST_CASE("prim: equals kruskal, parent edges sum to the total") {
  SplitMix64 rng(404);
  for (int it = 0; it < 40; ++it) {
    const auto g = random_graph(rng, 80);
    const auto expect = oracle::kruskal_weight(g);
    const auto ref = prim(g, ExecPolicy::seq());
    CHECK(ref.connected == expect.connected);
    CHECK(ref.total == expect.total);
    for (const auto& pol : kPolicies) CHECK(prim(g, pol) == ref);

    // every non-root vertex hangs off an existing edge; their weights sum
    // to the MST weight
    i64 sum = 0;
    for (int i = 0; i < g.n; ++i) {
      if (i == 0) {
        CHECK(ref.parent[i] == -1);
        continue;
      }
      const int par = ref.parent[i];
      REQUIRE(par >= 0);
      i64 w = -1;
      for (size_t k = 0; k < g.adj[i].size(); ++k)
        if (g.adj[i][k] == par) w = (w < 0) ? g.w[i][k] : std::min(w, g.w[i][k]);
      REQUIRE(w >= 0);
      sum += w;
    }
    CHECK(sum == ref.total);
  }
}

TEST_CASE("moore_dijkstra_flood: examples") {
  std::vector<i64> omega = {4, 7, 2};
  CHECK(moore_dijkstra_flood(edgeless_graph(3), omega, ExecPolicy::par(2)) == omega);

  WeightedGraph path;
  path.n = 3;
  path.adj = {{1}, {0, 2}, {1}};
  path.w = {{1}, {1, 2}, {2}};
  path.deg = {1, 2, 1};
  for (const auto& pol : kPolicies)
    CHECK(moore_dijkstra_flood(path, {0, 9, 5}, pol) == std::vector<i64>{0, 1, 2});

  // constant ceiling is already a fixpoint
  CHECK(moore_dijkstra_flood(path, {3, 3, 3}, ExecPolicy::par(4)) == std::vector<i64>{3, 3, 3});
}

TEST_CASE("moore_dijkstra_flood: equals berge, monotone selected keys") {
  SplitMix64 rng(405);
  for (int it = 0; it < 30; ++it) {
    const auto g = random_graph(rng, 60);
    const auto omega = gen_sequence(g.n, 0, 40, rng.next()).items;
    const auto inst = make_flooding(g, omega);
    const auto expect = dp::berge_flood(inst, ExecPolicy::seq()).tau;
    const auto ref = moore_dijkstra_flood_state(g, omega, ExecPolicy::seq());
    CHECK(ref.d == expect);
    for (const auto& pol : kPolicies) CHECK(moore_dijkstra_flood_state(g, omega, pol) == ref);
    for (int p = 1; p < g.n; ++p) CHECK(ref.d[ref.nd[p - 1]] <= ref.d[ref.nd[p]]);
  }
}

TEST_CASE("greedy kernels honor the no-parallel-update policy flag") {
  SplitMix64 rng(406);
  const auto g = random_graph(rng, 60);
  ExecPolicy pol = ExecPolicy::par(4);
  pol.parallel_update = false;
  CHECK(prim(g, pol) == prim(g, ExecPolicy::seq()));
  CHECK(dijkstra(g, 0, pol) == dijkstra(g, 0, ExecPolicy::seq()));
}
