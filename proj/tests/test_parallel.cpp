#include <doctest.h>

#include <atomic>
#include <numeric>
#include <vector>

#include "para/parallel.hpp"
#include "para/rng.hpp"

using namespace para;

TEST_CASE("par_for: empty range has no effect") {
  int touched = 0;
  par_for(0, 0, ExecPolicy::par(4), [&](i64) { ++touched; });
  par_for(5, 5, ExecPolicy::seq(), [&](i64) { ++touched; });
  par_for(7, 3, ExecPolicy::par(2), [&](i64) { ++touched; });
  CHECK(touched == 0);
}

TEST_CASE("par_for: disjoint writes match sequential under all worker counts") {
  std::vector<i64> expect(1000);
  std::iota(expect.begin(), expect.end(), 0);
  for (auto& x : expect) x *= 2;

  for (int w : {1, 2, 8}) {
    std::vector<i64> v(1000);
    std::iota(v.begin(), v.end(), 0);
    par_for(0, 1000, ExecPolicy::par(w), [&](i64 i) { v[i] *= 2; });
    CHECK(v == expect);
  }
}

TEST_CASE("par_for: every index runs exactly once") {
  std::vector<std::atomic<int>> hits(257);
  par_for(0, 257, ExecPolicy::par(5), [&](i64 i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("par_sections2: both tasks complete, disjoint halves") {
  std::vector<int> v(100, 0);
  par_sections2([&] { std::fill(v.begin(), v.begin() + 50, 1); },
                [&] { std::fill(v.begin() + 50, v.end(), 2); }, ExecPolicy::par(2));
  CHECK(std::count(v.begin(), v.end(), 1) == 50);
  CHECK(std::count(v.begin(), v.end(), 2) == 50);

  bool a = false, b = false;
  par_sections2([&] { a = true; }, [&] { b = true; }, ExecPolicy::seq());
  CHECK(a);
  CHECK(b);
}

TEST_CASE("par_reduce_argmin: examples") {
  const std::vector<i64> keys = {5, 3, 8, 1};
  auto at = [&](i64 i) { return keys[i]; };
  CHECK(par_reduce_argmin(0, 4, ExecPolicy::seq(), at) == 3);
  CHECK(par_reduce_argmin(0, 4, ExecPolicy::par(3), at) == 3);

  auto equal = [](i64) { return i64{7}; };
  CHECK(par_reduce_argmin(2, 9, ExecPolicy::par(4), equal) == 2);
  CHECK(par_reduce_argmin(5, 6, ExecPolicy::par(8), equal) == 5);

  CHECK_THROWS_AS(par_reduce_argmin(3, 3, ExecPolicy::seq(), equal), std::invalid_argument);
}

TEST_CASE("par_reduce_argmin: first minimum on random vectors, every worker count") {
  SplitMix64 rng(99);
  for (int it = 0; it < 300; ++it) {
    const i64 n = 1 + static_cast<i64>(rng.next_below(300));
    std::vector<i64> keys(n);
    for (auto& k : keys) k = rng.next_in(0, 20);  // duplicates likely
    i64 expect = 0;
    for (i64 i = 1; i < n; ++i)
      if (keys[i] < keys[expect]) expect = i;
    auto at = [&](i64 i) { return keys[i]; };
    for (int w : {1, 2, 4, 8})
      CHECK(par_reduce_argmin(0, n, ExecPolicy::par(w), at) == expect);
  }
}

TEST_CASE("adaptive_workers: formula and clamps") {
  ExecPolicy p = ExecPolicy::par(8, 0, 16);
  CHECK(adaptive_workers(100, p) == 7);  // ceil(100/16) = 7
  p.chunk = 64;
  CHECK(adaptive_workers(1, p) == 1);
  p.chunk = 1;
  CHECK(adaptive_workers(1'000'000, p) == 8);
  CHECK(adaptive_workers(0, p) == 1);
}

TEST_CASE("adaptive_workers: monotone in work, never exceeds workers") {
  SplitMix64 rng(7);
  for (int it = 0; it < 50; ++it) {
    ExecPolicy p = ExecPolicy::par(1 + static_cast<int>(rng.next_below(16)), 0,
                                   1 + static_cast<int>(rng.next_below(100)));
    int prev = 1;
    for (i64 work = 0; work < 400; ++work) {
      const int np = adaptive_workers(work, p);
      CHECK(np >= prev);
      CHECK(np <= p.workers);
      prev = np;
    }
  }
}

TEST_CASE("ExecPolicy: defaults") {
  const ExecPolicy s = ExecPolicy::seq();
  CHECK(!s.parallel());
  CHECK(s.workers == 1);
  const ExecPolicy p = ExecPolicy::par(4);
  CHECK(p.parallel());
  CHECK(p.effective_blocks() == 4);
  CHECK(ExecPolicy::par(4, 3).effective_blocks() == 3);
  CHECK(p.chunk == 64);
}
