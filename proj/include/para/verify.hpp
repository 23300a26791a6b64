#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "para/dp_kernels.hpp"
#include "para/exec_policy.hpp"
#include "para/instances.hpp"

namespace para::verify {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;  // on failure: the offending instance seed and values
};

struct Report {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// --- oracle equivalence (exact) ---------------------------------------

using KnapsackKernel = std::function<i64(const KnapsackInstance&, const ExecPolicy&)>;

// Kernel injectable so the harness can prove it catches a broken kernel.
Check knapsack_vs_exhaustive(int count, int max_n, u64 seed, const KnapsackKernel& kernel);
Check knapsack_vs_exhaustive(int count, int max_n, u64 seed);
Check dijkstra_vs_bellman(int count, int max_n, u64 seed);
Check prim_vs_kruskal(int count, int max_n, u64 seed);
Check lcs_vs_exhaustive(int count, int max_len, u64 seed);
Check lis_vs_exhaustive(int count, int max_n, u64 seed);
// Fixpoint check plus equality with the greedy flooding, per instance.
Check berge_fixpoint_and_mdflood(int count, int max_n, u64 seed);

// --- properties --------------------------------------------------------

Check lis_proposition1_all_cuts(int count, int max_n, u64 seed);
Check blocked_selection_vs_scan(int vectors, u64 seed);
Check warshall_triangle_and_idempotence(int count, int max_n, u64 seed);
Check dijkstra_vs_warshall_row(int count, int max_n, u64 seed);
Check berge_sweep_bound(int count, int max_n, u64 seed);

// --- policy invariance (exact, Parallel(w) == Sequential) --------------

// Kernel ids: knapsack warshall berge lcs lis dijkstra mst mdflood.
Check policy_invariance(const std::string& kernel, int count, const std::vector<int>& workers,
                        u64 seed);

const std::vector<std::string>& kernel_ids();

struct Options {
  u64 seed = 1;
  int count = 0;  // 0 -> per-check defaults
  int max_n = 0;  // 0 -> per-check defaults; otherwise caps instance sizes
  std::vector<int> workers = {1, 2, 4, 8};
};

// Full suite for one kernel id or "all". Throws std::invalid_argument for
// unknown ids or sizes beyond an oracle bound.
Report run(const std::string& kernel, const Options& opt);

// One line per check; returns report.ok().
bool print_report(std::ostream& out, const Report& report);

}  // namespace para::verify
