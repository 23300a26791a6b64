#pragma once

#include <vector>

#include "para/inf.hpp"

namespace para {

// Adjacency-list graph: per-vertex neighbor ids with a parallel weight
// list. Weights are nonnegative and finite (< kMaxFinite). For undirected
// graphs each edge appears in both endpoint lists with the same weight.
// No self-loops, no duplicate neighbors.
struct WeightedGraph {
  int n = 0;
  bool undirected = true;
  std::vector<int> deg;                // deg[i] == adj[i].size()
  std::vector<std::vector<int>> adj;   // neighbor ids
  std::vector<std::vector<i64>> w;     // parallel edge weights

  bool operator==(const WeightedGraph&) const = default;
};

// Row-major n x n cost matrix; kInf encodes a missing edge.
struct DenseMatrix {
  int n = 0;
  std::vector<i64> cells;

  static DenseMatrix filled(int n, i64 v) {
    DenseMatrix m;
    m.n = n;
    m.cells.assign(static_cast<size_t>(n) * n, v);
    return m;
  }

  i64& at(int i, int j) { return cells[static_cast<size_t>(i) * n + j]; }
  i64 at(int i, int j) const { return cells[static_cast<size_t>(i) * n + j]; }
  const i64* row(int i) const { return cells.data() + static_cast<size_t>(i) * n; }
  i64* row(int i) { return cells.data() + static_cast<size_t>(i) * n; }

  bool operator==(const DenseMatrix&) const = default;
};

struct Sequence {
  std::vector<i64> items;

  i64 n() const { return static_cast<i64>(items.size()); }
  bool operator==(const Sequence&) const = default;
};

struct KnapsackInstance {
  std::vector<i64> v;  // item values, >= 1
  std::vector<i64> w;  // item weights, >= 1
  i64 capacity = 0;

  int n() const { return static_cast<int>(v.size()); }
  bool operator==(const KnapsackInstance&) const = default;
};

// Symmetric valuation (kInf where no edge, including the diagonal) plus
// the per-vertex ceiling the flooding must stay under.
struct FloodingInstance {
  DenseMatrix valuation;
  std::vector<i64> ceiling;

  int n() const { return valuation.n; }
  bool operator==(const FloodingInstance&) const = default;
};

// Connected random graph: a random spanning cycle, then random extra edges
// until every degree lies in [deg_lo, deg_hi]. Deterministic per seed.
// Throws std::invalid_argument when the degree range is infeasible.
WeightedGraph gen_graph(int n, int deg_lo, int deg_hi, i64 w_lo, i64 w_hi, u64 seed,
                        bool undirected = true);

Sequence gen_sequence(i64 count, i64 lo, i64 hi, u64 seed);

KnapsackInstance gen_knapsack(int n, i64 w_max, i64 v_max, i64 capacity, u64 seed);

// Dense view of a graph: zero diagonal, min edge weight where adjacent,
// kInf elsewhere. Duplicate edges keep the minimum.
DenseMatrix to_dense(const WeightedGraph& g);

FloodingInstance make_flooding(const WeightedGraph& g, std::vector<i64> ceiling);

// Traversal check: every vertex reachable from 0, and for directed graphs
// also in the reverse direction.
bool graph_connected(const WeightedGraph& g);

}  // namespace para
