#pragma once

#include <algorithm>

namespace para {

// The execution knob every kernel takes: run sequentially, or on a shared
// worker pool with at most `workers` workers. `blocks` is the block count
// for blocked argmin selection (defaults to the worker count) and `chunk`
// the elements-per-worker threshold used by the degree-adaptive update.
struct ExecPolicy {
  enum class Mode { Sequential, Parallel };

  Mode mode = Mode::Sequential;
  int workers = 1;   // >= 1
  int blocks = 0;    // 0 -> same as workers
  int chunk = 64;    // >= 1
  // The greedy neighborhood update may run with adaptive worker counts;
  // turning this off keeps that step single-threaded, which is often
  // faster on low-degree graphs.
  bool parallel_update = true;

  bool parallel() const { return mode == Mode::Parallel; }
  int effective_blocks() const { return blocks > 0 ? blocks : workers; }

  static ExecPolicy seq() { return {}; }

  static ExecPolicy par(int workers, int blocks = 0, int chunk = 64) {
    ExecPolicy p;
    p.mode = Mode::Parallel;
    p.workers = std::max(1, workers);
    p.blocks = blocks;
    p.chunk = std::max(1, chunk);
    return p;
  }
};

// Worker cap from PARA_WORKERS, else the hardware thread count.
int default_workers();

}  // namespace para
