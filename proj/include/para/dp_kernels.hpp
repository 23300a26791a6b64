#pragma once

#include <optional>
#include <vector>

#include "para/exec_policy.hpp"
#include "para/instances.hpp"

namespace para::dp {

// Best 0-1 knapsack value. Two-row rolling buffer (row i stored at i mod 2),
// item loop sequential, capacity loop data-parallel.
i64 knapsack(const KnapsackInstance& inst, const ExecPolicy& pol);

// All-pairs shortest distances, in place on a copy: the pivot loop k is
// sequential, the row loop parallel. Saturating min-plus keeps kInf exact.
DenseMatrix floyd_warshall(DenseMatrix m, const ExecPolicy& pol);

struct FloodResult {
  std::vector<i64> tau;
  int sweeps = 0;

  bool operator==(const FloodResult&) const = default;
};

// Dominated flooding by synchronous sweeps from tau = ceiling, double
// buffer indexed sweep mod 2, vertices parallel; stops when two
// consecutive buffers are equal and reports the sweep count.
FloodResult berge_flood(const FloodingInstance& inst, const ExecPolicy& pol);

// Longest common subsequence length. Sequential: the rectangular double
// loop. Parallel: anti-diagonal sweeps i+j=k over the same full table.
i64 lcs(const Sequence& s, const Sequence& t, const ExecPolicy& pol);

// Longest strictly increasing subsequence length. Sequential: the classic
// quadratic loop. Parallel: prefix/suffix split at n/2 with a parallel
// crossing combine. n < 3 always takes the sequential loop.
i64 lis(const Sequence& a, const ExecPolicy& pol);

// The split-combine LIS at an explicit cut (prefix [0,cut), suffix
// [cut,n)), valid for 1 <= cut < n. Exposed so the split equality can be
// checked at every cut, not only n/2.
i64 lis_at_cut(const Sequence& a, i64 cut, const ExecPolicy& pol);

// Uniform wrapper used by the verify/bench harnesses; only the fields a
// kernel produces are set.
struct DpResult {
  i64 value = 0;
  std::optional<DenseMatrix> matrix;
  std::optional<std::vector<i64>> vec;
  int iterations = 0;

  bool operator==(const DpResult&) const = default;
};

}  // namespace para::dp
