#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "para/exec_policy.hpp"
#include "para/inf.hpp"

namespace para::bench {

// Kernels the harness can time. The greedy flooding and Dijkstra are
// verifiable but not part of the speedup study, which covers the five
// dynamic-programming kernels plus the MST.
enum class Kernel { Knapsack, Warshall, Berge, Lcs, Lis, Mst };

const std::vector<Kernel>& all_kernels();
std::string kernel_label(Kernel k);  // table label, e.g. "WARSHALL"
std::optional<Kernel> kernel_from_id(const std::string& id);  // "warshall", "mst", ...

struct BenchConfig {
  std::vector<Kernel> kernels = all_kernels();
  i64 n = 0;         // 0 -> per-kernel preset
  i64 cap = 0;       // knapsack capacity; 0 -> 10n
  int deg_lo = 10;   // sparse-graph degree range
  int deg_hi = 20;
  i64 alphabet = 4;  // LCS alphabet size
  std::vector<int> workers;  // empty -> 2..cap (PARA_WORKERS or 8)
  int reps = 5;
  int warmups = 2;
  u64 seed = 1;
  int blocks = 0;
  int chunk = 64;
  bool desk = false;  // scaled-down sizes that finish in minutes
};

struct WorkerTiming {
  int workers = 0;
  double median_s = 0.0;
  double speedup = 0.0;  // seq median / this median
};

struct BenchRow {
  std::string kernel;
  i64 n = 0;
  double seq_median_s = 0.0;
  std::vector<WorkerTiming> timings;
  bool invariance_ok = true;  // checked once per row before timing
};

struct BenchReport {
  int logical_cores = 0;
  int physical_cores = 0;
  std::string timestamp;  // UTC, seconds resolution
  u64 seed = 0;
  std::vector<BenchRow> rows;
};

BenchReport run_bench(const BenchConfig& cfg);

// Table-shaped outputs carry exactly the same formatted numbers; the JSON
// lines file additionally keeps the per-worker medians for history.
std::string to_markdown(const BenchReport&);
std::string to_csv(const BenchReport&);
std::string to_jsonl(const BenchReport&);

struct TuneResult {
  std::vector<std::pair<int, double>> timings;  // (chunk, median seconds)
  int best_chunk = 0;
};

// Times a greedy kernel ("mst", "dijkstra" or "mdflood") across chunk
// sizes for its adaptive neighborhood update and picks the fastest.
// Throws on an empty candidate list or a kernel without that update step.
TuneResult tune_chunk(const std::string& kernel_id, const std::vector<int>& chunks,
                      const BenchConfig& cfg);

int physical_cores();
std::vector<int> default_worker_sweep();  // 2..cap, or {1} when capped below 2

// Median wall time of fn() over reps runs after warmups.
double time_median_s(int warmups, int reps, const std::function<void()>& fn);

}  // namespace para::bench
