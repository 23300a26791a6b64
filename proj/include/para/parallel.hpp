#pragma once

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "para/exec_policy.hpp"
#include "para/inf.hpp"

namespace para {

namespace detail {

// Non-owning callable handed to the pool; avoids std::function allocation
// on the per-iteration dispatch path.
struct WorkerFn {
  void* ctx;
  void (*invoke)(void* ctx, int worker);
};

// Runs fn(worker) for worker in [0, nworkers); worker 0 is the caller.
// Blocks until every worker finished. Not reentrant (no nested regions).
void pool_run(int nworkers, WorkerFn fn);

// Contiguous balanced split of [lo,hi) into nparts; part indexes are stable,
// so reductions that combine in part order preserve first-occurrence ties.
inline std::pair<i64, i64> split_range(i64 lo, i64 hi, int nparts, int part) {
  const i64 len = hi - lo;
  const i64 q = len / nparts;
  const i64 r = len % nparts;
  const i64 b = lo + part * q + std::min<i64>(part, r);
  return {b, b + q + (part < r ? 1 : 0)};
}

}  // namespace detail

// Data-parallel loop over [lo,hi): body(i) exactly once per index, static
// contiguous partition per worker, all effects visible on return. The body
// must write only locations disjoint across indices and must not read
// anything written by another index of the same loop.
template <class Body>
void par_for(i64 lo, i64 hi, const ExecPolicy& pol, Body&& body) {
  if (hi <= lo) return;
  const int w = pol.parallel() ? static_cast<int>(std::min<i64>(pol.workers, hi - lo)) : 1;
  if (w <= 1) {
    for (i64 i = lo; i < hi; ++i) body(i);
    return;
  }
  struct Ctx {
    i64 lo, hi;
    int w;
    std::remove_reference_t<Body>* body;
  } ctx{lo, hi, w, &body};
  detail::pool_run(w, {&ctx, [](void* p, int t) {
                         auto* c = static_cast<Ctx*>(p);
                         auto [b, e] = detail::split_range(c->lo, c->hi, c->w, t);
                         for (i64 i = b; i < e; ++i) (*c->body)(i);
                       }});
}

// Two independent tasks; both have completed on return.
template <class TaskA, class TaskB>
void par_sections2(TaskA&& a, TaskB&& b, const ExecPolicy& pol) {
  if (!pol.parallel() || pol.workers < 2) {
    a();
    b();
    return;
  }
  struct Ctx {
    std::remove_reference_t<TaskA>* a;
    std::remove_reference_t<TaskB>* b;
  } ctx{&a, &b};
  detail::pool_run(2, {&ctx, [](void* p, int t) {
                         auto* c = static_cast<Ctx*>(p);
                         if (t == 0)
                           (*c->a)();
                         else
                           (*c->b)();
                       }});
}

// Smallest index in [lo,hi) attaining the minimum of key(i). Ties break to
// the first occurrence under every policy: each worker keeps the first
// minimum of its contiguous part and parts are combined in index order with
// a strict comparison.
template <class Keys>
i64 par_reduce_argmin(i64 lo, i64 hi, const ExecPolicy& pol, Keys&& key) {
  if (hi <= lo) throw std::invalid_argument("par_reduce_argmin: empty range");
  const int w = pol.parallel() ? static_cast<int>(std::min<i64>(pol.workers, hi - lo)) : 1;
  if (w <= 1) {
    i64 best = lo;
    i64 best_key = key(lo);
    for (i64 i = lo + 1; i < hi; ++i) {
      const i64 k = key(i);
      if (k < best_key) {
        best = i;
        best_key = k;
      }
    }
    return best;
  }
  std::vector<i64> idx(static_cast<size_t>(w));
  std::vector<i64> val(static_cast<size_t>(w));
  struct Ctx {
    i64 lo, hi;
    int w;
    std::remove_reference_t<Keys>* key;
    i64* idx;
    i64* val;
  } ctx{lo, hi, w, &key, idx.data(), val.data()};
  detail::pool_run(w, {&ctx, [](void* p, int t) {
                         auto* c = static_cast<Ctx*>(p);
                         auto [b, e] = detail::split_range(c->lo, c->hi, c->w, t);
                         i64 best = b;
                         i64 best_key = (*c->key)(b);
                         for (i64 i = b + 1; i < e; ++i) {
                           const i64 k = (*c->key)(i);
                           if (k < best_key) {
                             best = i;
                             best_key = k;
                           }
                         }
                         c->idx[t] = best;
                         c->val[t] = best_key;
                       }});
  int best = 0;
  for (int t = 1; t < w; ++t)
    if (val[t] < val[best]) best = t;
  return idx[best];
}

// max(1, min(ceil(work_items / chunk), workers)).
int adaptive_workers(i64 work_items, const ExecPolicy& pol);

}  // namespace para
