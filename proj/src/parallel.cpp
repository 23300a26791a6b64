#include "para/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace para {

namespace {

inline void cpu_relax() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_ia32_pause();
#elif defined(__aarch64__)
  asm volatile("yield");
#else
  std::this_thread::yield();
#endif
}

// Iterations of the spin phase before a waiter falls back to sleeping on a
// condition variable. Kernels dispatch one region per outer iteration, so
// workers usually catch the next region while still hot; once the caller
// stays sequential for longer than the spin window, workers get off the
// CPU (a timed sequential baseline must not compete with spinning threads).
// Spinning is only worth it when the region fits the machine: with more
// workers than hardware threads a spinner steals cycles from workers that
// still hold real work, so oversubscribed regions go straight to sleep.
constexpr int kSpinLimit = 4'000;
constexpr int kSpinLimitOversubscribed = 64;

// One pool per process, grown on demand and reused for every parallel
// region. A region hands out worker ids [0, nworkers); id 0 runs on the
// caller, ids 1.. on pool threads. The job is published by the seq_cst
// bump of `gen_`: workers load it with acquire semantics and see every
// write the caller made before the bump; the caller observes the workers'
// writes through their `done_` increments. The sleep paths use seq_cst
// flag/counter handshakes so neither side can miss the other's update.
class WorkerPool {
 public:
  static WorkerPool& instance() {
    static WorkerPool pool;
    return pool;
  }

  void run(int nworkers, detail::WorkerFn fn) {
    if (nworkers <= 1) {
      fn.invoke(fn.ctx, 0);
      return;
    }
    const int helpers = nworkers - 1;
    if (static_cast<int>(threads_.size()) < helpers) {
      std::lock_guard<std::mutex> lk(mu_);
      while (static_cast<int>(threads_.size()) < helpers) {
        const int slot = static_cast<int>(threads_.size());
        threads_.emplace_back([this, slot] { worker_loop(slot); });
      }
    }

    const bool fits = nworkers <= hw_;
    job_ = fn;
    fits_.store(fits, std::memory_order_relaxed);
    active_.store(helpers, std::memory_order_relaxed);
    done_.store(0, std::memory_order_relaxed);
    gen_.fetch_add(1, std::memory_order_seq_cst);
    if (sleepers_.load(std::memory_order_seq_cst) > 0) {
      std::lock_guard<std::mutex> lk(mu_);
      cv_start_.notify_all();
    }

    fn.invoke(fn.ctx, 0);

    const int spin_limit = fits ? kSpinLimit : kSpinLimitOversubscribed;
    for (int spins = 0; done_.load(std::memory_order_acquire) != helpers;) {
      if (++spins < spin_limit) {
        cpu_relax();
        continue;
      }
      std::unique_lock<std::mutex> lk(mu_);
      caller_waiting_.store(true, std::memory_order_seq_cst);
      cv_done_.wait(lk, [&] { return done_.load(std::memory_order_seq_cst) == helpers; });
      caller_waiting_.store(false, std::memory_order_seq_cst);
      break;
    }
  }

  ~WorkerPool() {
    shutdown_.store(true, std::memory_order_seq_cst);
    {
      std::lock_guard<std::mutex> lk(mu_);
      cv_start_.notify_all();
    }
    for (auto& t : threads_) t.join();
  }

 private:
  WorkerPool() = default;

  void worker_loop(int slot) {
    u64 seen = 0;
    for (;;) {
      // Idle-spin budget follows the last region's fit; stale by at most
      // one region, and both failure modes are benign.
      const int spin_limit =
          fits_.load(std::memory_order_relaxed) ? kSpinLimit : kSpinLimitOversubscribed;
      u64 g;
      int spins = 0;
      while ((g = gen_.load(std::memory_order_acquire)) == seen &&
             !shutdown_.load(std::memory_order_relaxed)) {
        if (++spins < spin_limit) {
          cpu_relax();
          continue;
        }
        std::unique_lock<std::mutex> lk(mu_);
        sleepers_.fetch_add(1, std::memory_order_seq_cst);
        cv_start_.wait(lk, [&] {
          return gen_.load(std::memory_order_seq_cst) != seen ||
                 shutdown_.load(std::memory_order_relaxed);
        });
        sleepers_.fetch_sub(1, std::memory_order_seq_cst);
        spins = 0;
      }
      if (shutdown_.load(std::memory_order_relaxed)) return;
      seen = gen_.load(std::memory_order_acquire);
      if (slot < active_.load(std::memory_order_relaxed)) {
        const detail::WorkerFn job = job_;
        job.invoke(job.ctx, slot + 1);
        const int finished = done_.fetch_add(1, std::memory_order_seq_cst) + 1;
        if (finished == active_.load(std::memory_order_relaxed) &&
            caller_waiting_.load(std::memory_order_seq_cst)) {
          std::lock_guard<std::mutex> lk(mu_);
          cv_done_.notify_one();
        }
      }
    }
  }

  std::mutex mu_;
  std::condition_variable cv_start_;
  std::condition_variable cv_done_;
  std::vector<std::thread> threads_;
  detail::WorkerFn job_{};
  const int hw_ = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<u64> gen_{0};
  std::atomic<int> active_{0};
  std::atomic<int> done_{0};
  std::atomic<int> sleepers_{0};
  std::atomic<bool> fits_{true};
  std::atomic<bool> caller_waiting_{false};
  std::atomic<bool> shutdown_{false};
};

}  // namespace

namespace detail {

void pool_run(int nworkers, WorkerFn fn) { WorkerPool::instance().run(nworkers, fn); }

}  // namespace detail

int default_workers() {
  if (const char* env = std::getenv("PARA_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

int adaptive_workers(i64 work_items, const ExecPolicy& pol) {
  if (work_items <= 0) return 1;
  const i64 c = std::max(1, pol.chunk);
  const i64 np = (work_items + c - 1) / c;
  return static_cast<int>(std::max<i64>(1, std::min<i64>(np, pol.workers)));
}

}  // namespace para
