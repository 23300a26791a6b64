#pragma once

#include <cstdint>
#include <vector>

#include "para/exec_policy.hpp"
#include "para/instances.hpp"

namespace para::greedy {

// Shared state of the selection/update skeleton: nd is a permutation of
// vertex ids whose prefix [0,p) holds the selected vertices in selection
// order, d the per-vertex key (distance, attachment cost or flood level),
// sel the selected mask. Keys of selected vertices never change.
struct GreedyState {
  std::vector<int> nd;
  std::vector<i64> d;
  std::vector<std::uint8_t> sel;
  std::vector<int> parent;  // only filled by prim

  bool operator==(const GreedyState&) const = default;
};

// Position k in [p, n) minimizing d[nd[k]], first occurrence. Computed by
// block-local scans (b blocks of size (n-p)/b, the
// last absorbing the remainder, b clamped to the frontier size) followed
// by a sequential first-min reduction over the blocks.
i64 blocked_min_select(const GreedyState& state, i64 p, const ExecPolicy& pol);

// Single-source shortest distances by array-scan selection; kInf marks
// unreachable vertices.
std::vector<i64> dijkstra(const WeightedGraph& g, int source, const ExecPolicy& pol);
GreedyState dijkstra_state(const WeightedGraph& g, int source, const ExecPolicy& pol);

struct PrimResult {
  i64 total = 0;
  std::vector<int> parent;  // -1 for the root (vertex 0)
  bool connected = true;

  bool operator==(const PrimResult&) const = default;
};

// MST weight and parent array, array-scan Prim from vertex 0. A kInf
// selection means the input was disconnected; the result is flagged and
// covers only the reached component.
PrimResult prim(const WeightedGraph& g, const ExecPolicy& pol);

// Dominated flooding by greedy selection: repeatedly fix the unselected
// vertex with minimal tau, then relax unselected neighbors with
// min(tau_i, max(tau_k, w)). Matches berge_flood on the same instance.
std::vector<i64> moore_dijkstra_flood(const WeightedGraph& g, const std::vector<i64>& ceiling,
                                      const ExecPolicy& pol);
GreedyState moore_dijkstra_flood_state(const WeightedGraph& g, const std::vector<i64>& ceiling,
                                       const ExecPolicy& pol);

}  // namespace para::greedy
