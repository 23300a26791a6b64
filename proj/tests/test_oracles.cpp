#include <doctest.h>

#include <stdexcept>

#include "para/oracles.hpp"

using namespace para;
using namespace para::oracle;

namespace {

Sequence seq_of(std::initializer_list<i64> xs) { return Sequence{std::vector<i64>(xs)}; }

// "ABCBDAB" and "BDCABA" as integer codes A=0 B=1 C=2 D=3.
const Sequence kAbcbdab = seq_of({0, 1, 2, 1, 3, 0, 1});
const Sequence kBdcaba = seq_of({1, 3, 2, 0, 1, 0});

WeightedGraph chain_graph() {
  // 0 -1- ... with weights 4 then 3
  WeightedGraph g;
  g.n = 3;
  g.adj = {{1}, {0, 2}, {1}};
  g.w = {{4}, {4, 3}, {3}};
  g.deg = {1, 2, 1};
  return g;
}

}  // namespace

TEST_CASE("knapsack_exhaustive") {
  KnapsackInstance inst;
  inst.v = {1, 4, 5, 7};
  inst.w = {1, 3, 4, 5};
  inst.capacity = 7;
  CHECK(knapsack_exhaustive(inst) == 9);

  inst.capacity = 0;
  CHECK(knapsack_exhaustive(inst) == 0);

  KnapsackInstance empty;
  empty.capacity = 10;
  CHECK(knapsack_exhaustive(empty) == 0);

  KnapsackInstance big;
  big.v.assign(25, 1);
  big.w.assign(25, 1);
  big.capacity = 5;
  CHECK_THROWS_AS(knapsack_exhaustive(big), std::invalid_argument);
}

TEST_CASE("bellman_ford") {
  WeightedGraph edgeless;
  edgeless.n = 3;
  edgeless.adj.resize(3);
  edgeless.w.resize(3);
  edgeless.deg.assign(3, 0);
  CHECK(bellman_ford(edgeless, 0) == std::vector<i64>{0, kInf, kInf});

  WeightedGraph one;
  one.n = 2;
  one.adj = {{1}, {0}};
  one.w = {{6}, {6}};
  one.deg = {1, 1};
  CHECK(bellman_ford(one, 0) == std::vector<i64>{0, 6});

  CHECK(bellman_ford(chain_graph(), 0) == std::vector<i64>{0, 4, 7});
  CHECK_THROWS_AS(bellman_ford(one, 5), std::out_of_range);
}

TEST_CASE("kruskal_weight") {
  // triangle with weights 1,2,3
  WeightedGraph tri;
  tri.n = 3;
  tri.adj = {{1, 2}, {0, 2}, {0, 1}};
  tri.w = {{1, 3}, {1, 2}, {3, 2}};
  tri.deg = {2, 2, 2};
  const auto r = kruskal_weight(tri);
  CHECK(r.connected);
  CHECK(r.total == 3);

  const auto chain = kruskal_weight(chain_graph());
  CHECK(chain.connected);
  CHECK(chain.total == 7);  // a tree keeps all its edges

  WeightedGraph single;
  single.n = 1;
  single.adj.resize(1);
  single.w.resize(1);
  single.deg = {0};
  CHECK(kruskal_weight(single).total == 0);
  CHECK(kruskal_weight(single).connected);

  WeightedGraph split;
  split.n = 4;
  split.adj = {{1}, {0}, {3}, {2}};
  split.w = {{1}, {1}, {2}, {2}};
  split.deg = {1, 1, 1, 1};
  CHECK(!kruskal_weight(split).connected);
}

TEST_CASE("lcs_exhaustive") {
  const auto s = seq_of({3, 1, 4, 1, 5});
  CHECK(lcs_exhaustive(s, s) == 5);
  CHECK(lcs_exhaustive(seq_of({1, 2, 3}), seq_of({4, 5, 6})) == 0);
  CHECK(lcs_exhaustive(kAbcbdab, kBdcaba) == 4);
  CHECK(lcs_exhaustive(seq_of({}), s) == 0);

  Sequence too_long;
  too_long.items.assign(15, 1);
  CHECK_THROWS_AS(lcs_exhaustive(too_long, s), std::invalid_argument);
}

TEST_CASE("lis_exhaustive") {
  CHECK(lis_exhaustive(seq_of({9, 7, 5, 3})) == 1);
  CHECK(lis_exhaustive(seq_of({1, 2, 3, 4, 5, 6})) == 6);
  CHECK(lis_exhaustive(seq_of({10, 22, 9, 33, 21, 50, 41, 60})) == 5);
  CHECK(lis_exhaustive(seq_of({})) == 0);

  Sequence too_long;
  too_long.items.assign(19, 1);
  CHECK_THROWS_AS(lis_exhaustive(too_long), std::invalid_argument);
}

TEST_CASE("flood_fixpoint_check") {
  // edgeless: tau = omega is the fixpoint, anything lower is not
  FloodingInstance inst;
  inst.valuation = DenseMatrix::filled(3, kInf);
  inst.ceiling = {4, 7, 2};
  CHECK(flood_fixpoint_check(inst, {4, 7, 2}));
  CHECK(!flood_fixpoint_check(inst, {3, 6, 1}));

  // path 0-1 (v=1), 1-2 (v=2), omega=[0,9,5] -> tau=[0,1,2]
  FloodingInstance path;
  path.valuation = DenseMatrix::filled(3, kInf);
  path.valuation.at(0, 1) = path.valuation.at(1, 0) = 1;
  path.valuation.at(1, 2) = path.valuation.at(2, 1) = 2;
  path.ceiling = {0, 9, 5};
  CHECK(flood_fixpoint_check(path, {0, 1, 2}));
  CHECK(!flood_fixpoint_check(path, {0, 9, 5}));
  CHECK(!flood_fixpoint_check(path, {0, 1, 5}));
}
