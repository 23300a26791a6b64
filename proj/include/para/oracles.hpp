#pragma once

#include <vector>

#include "para/instances.hpp"

namespace para::oracle {

// Reference algorithms used only by tests and the `verify` command.
// Deliberately from different algorithmic families than the kernels
// (enumeration, edge sorting, round-based relaxation), single-threaded,
// and tractable only at small sizes.

// Best 0-1 knapsack value by subset enumeration (DFS with weight pruning).
// Requires n <= 24.
i64 knapsack_exhaustive(const KnapsackInstance& inst);

// Shortest distances from `source` by |V|-1 relaxation rounds.
std::vector<i64> bellman_ford(const WeightedGraph& g, int source);

struct KruskalResult {
  i64 total = 0;
  bool connected = true;
};

// MST weight via sorted edges + union-find. Flags disconnected inputs.
KruskalResult kruskal_weight(const WeightedGraph& g);

// LCS length by plain recursion; requires both lengths <= 14.
i64 lcs_exhaustive(const Sequence& s, const Sequence& t);

// LIS length by enumerating all subsequences; requires n <= 18.
i64 lis_exhaustive(const Sequence& a);

// True iff tau is the flooding fixpoint: tau_i = min(omega_i, min_j
// max(v_ij, tau_j)) for all i, and tau <= omega pointwise.
bool flood_fixpoint_check(const FloodingInstance& inst, const std::vector<i64>& tau);

}  // namespace para::oracle
