#include "para/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "para/greedy_kernels.hpp"
#include "para/oracles.hpp"
#include "para/parallel.hpp"
#include "para/rng.hpp"

namespace para::verify {

namespace {

std::string seed_msg(u64 s) { return "instance seed " + std::to_string(s); }

// Random connected graph with a feasible degree range; n in [2, max_n].
WeightedGraph random_graph(SplitMix64& rng, int max_n, u64& inst_seed, bool allow_directed) {
  const int n = 2 + static_cast<int>(rng.next_below(static_cast<u64>(std::max(1, max_n - 1))));
  const bool directed = allow_directed && rng.next_below(4) == 0;
  inst_seed = rng.next();
  if (n == 2) return gen_graph(2, 1, 1, 1, 100, inst_seed, !directed);
  int lo = 1 + static_cast<int>(rng.next_below(static_cast<u64>(std::min(8, n - 1))));
  int hi = std::min(n - 1, lo + 1 + static_cast<int>(rng.next_below(8)));
  hi = std::max(hi, 2);
  lo = std::min(lo, hi);
  return gen_graph(n, lo, hi, 1, 100, inst_seed, !directed);
}

std::vector<i64> random_ceiling(SplitMix64& rng, int n, u64& ceil_seed) {
  ceil_seed = rng.next();
  return gen_sequence(n, 0, 1000, ceil_seed).items;
}

}  // namespace

Check knapsack_vs_exhaustive(int count, int max_n, u64 seed, const KnapsackKernel& kernel) {
  Check c;
  c.name = "knapsack-vs-exhaustive";
  if (max_n > 24) throw std::invalid_argument("knapsack oracle bound is n <= 24");
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    const int n = static_cast<int>(rng.next_below(static_cast<u64>(max_n) + 1));
    const i64 wmax = rng.next_in(1, 15);
    const i64 vmax = rng.next_in(1, 15);
    const i64 cap = rng.next_in(0, 10 * std::max(n, 1));
    const u64 s = rng.next();
    const auto inst = gen_knapsack(n, wmax, vmax, cap, s);
    const i64 expect = oracle::knapsack_exhaustive(inst);
    const i64 got_seq = kernel(inst, ExecPolicy::seq());
    const i64 got_par = kernel(inst, ExecPolicy::par(3));
    if (got_seq != expect || got_par != expect) {
      c.pass = false;
      std::ostringstream os;
      os << seed_msg(s) << ": oracle " << expect << ", kernel seq " << got_seq << ", par "
         << got_par;
      c.detail = os.str();
      return c;
    }
  }
  c.detail = std::to_string(count) + " instances, n <= " + std::to_string(max_n);
  return c;
}

Check knapsack_vs_exhaustive(int count, int max_n, u64 seed) {
  return knapsack_vs_exhaustive(count, max_n, seed,
                                [](const KnapsackInstance& i, const ExecPolicy& p) {
                                  return dp::knapsack(i, p);
                                });
}

Check dijkstra_vs_bellman(int count, int max_n, u64 seed) {
  Check c;
  c.name = "dijkstra-vs-bellman-ford";
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    u64 s = 0;
    const auto g = random_graph(rng, max_n, s, /*allow_directed=*/true);
    const int src = static_cast<int>(rng.next_below(static_cast<u64>(g.n)));
    const auto expect = oracle::bellman_ford(g, src);
    if (greedy::dijkstra(g, src, ExecPolicy::seq()) != expect ||
        greedy::dijkstra(g, src, ExecPolicy::par(4)) != expect) {
      c.pass = false;
      c.detail = seed_msg(s) + ", source " + std::to_string(src);
      return c;
    }
  }
  c.detail = std::to_string(count) + " graphs, n <= " + std::to_string(max_n);
  return c;
}

Check prim_vs_kruskal(int count, int max_n, u64 seed) {
  Check c;
  c.name = "prim-vs-kruskal";
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    u64 s = 0;
    const auto g = random_graph(rng, max_n, s, /*allow_directed=*/false);
    const auto expect = oracle::kruskal_weight(g);
    const auto got = greedy::prim(g, ExecPolicy::par(4));
    if (!expect.connected || !got.connected || got.total != expect.total) {
      c.pass = false;
      std::ostringstream os;
      os << seed_msg(s) << ": kruskal " << expect.total << ", prim " << got.total;
      c.detail = os.str();
      return c;
    }
  }
  c.detail = std::to_string(count) + " graphs, n <= " + std::to_string(max_n);
  return c;
}

Check lcs_vs_exhaustive(int count, int max_len, u64 seed) {
  Check c;
  c.name = "lcs-vs-exhaustive";
  if (max_len > 14) throw std::invalid_argument("lcs oracle bound is length <= 14");
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    const i64 ns = rng.next_below(static_cast<u64>(max_len) + 1);
    const i64 nt = rng.next_below(static_cast<u64>(max_len) + 1);
    const i64 alpha = (it % 2 == 0) ? 3 : 9;
    const u64 ss = rng.next(), st = rng.next();
    const auto s = gen_sequence(ns, 0, alpha, ss);
    const auto t = gen_sequence(nt, 0, alpha, st);
    const i64 expect = oracle::lcs_exhaustive(s, t);
    if (dp::lcs(s, t, ExecPolicy::seq()) != expect ||
        dp::lcs(s, t, ExecPolicy::par(3)) != expect ||
        dp::lcs(t, s, ExecPolicy::seq()) != expect) {
      c.pass = false;
      c.detail = seed_msg(ss) + " / " + std::to_string(st);
      return c;
    }
  }
  c.detail = std::to_string(count) + " pairs, length <= " + std::to_string(max_len);
  return c;
}

Check lis_vs_exhaustive(int count, int max_n, u64 seed) {
  Check c;
  c.name = "lis-vs-exhaustive";
  if (max_n > 18) throw std::invalid_argument("lis oracle bound is n <= 18");
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    const i64 n = rng.next_below(static_cast<u64>(max_n) + 1);
    const i64 lo = (it % 2 == 0) ? -9 : 0;
    const i64 hi = (it % 2 == 0) ? 9 : 99;
    const u64 s = rng.next();
    const auto a = gen_sequence(n, lo, hi, s);
    const i64 expect = oracle::lis_exhaustive(a);
    if (dp::lis(a, ExecPolicy::seq()) != expect || dp::lis(a, ExecPolicy::par(3)) != expect) {
      c.pass = false;
      c.detail = seed_msg(s);
      return c;
    }
  }
  c.detail = std::to_string(count) + " sequences, n <= " + std::to_string(max_n);
  return c;
}

Check berge_fixpoint_and_mdflood(int count, int max_n, u64 seed) {
  Check c;
  c.name = "berge-fixpoint-and-mdflood";
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    u64 gs = 0, cs = 0;
    const auto g = random_graph(rng, max_n, gs, /*allow_directed=*/false);
    const auto ceiling = random_ceiling(rng, g.n, cs);
    const auto inst = make_flooding(g, ceiling);
    const auto flood = dp::berge_flood(inst, ExecPolicy::par(4));
    if (!oracle::flood_fixpoint_check(inst, flood.tau)) {
      c.pass = false;
      c.detail = seed_msg(gs) + ": tau is not the fixpoint";
      return c;
    }
    if (greedy::moore_dijkstra_flood(g, ceiling, ExecPolicy::seq()) != flood.tau) {
      c.pass = false;
      c.detail = seed_msg(gs) + ": moore-dijkstra differs from berge";
      return c;
    }
  }
  c.detail = std::to_string(count) + " instances, n <= " + std::to_string(max_n);
  return c;
}

Check berge_sweep_bound(int count, int max_n, u64 seed) {
  Check c;
  c.name = "berge-sweep-bound";
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    u64 gs = 0, cs = 0;
    const auto g = random_graph(rng, max_n, gs, /*allow_directed=*/false);
    const auto inst = make_flooding(g, random_ceiling(rng, g.n, cs));
    const auto flood = dp::berge_flood(inst, ExecPolicy::seq());
    if (flood.sweeps > g.n + 1) {
      c.pass = false;
      c.detail = seed_msg(gs) + ": " + std::to_string(flood.sweeps) + " sweeps on n=" +
                 std::to_string(g.n);
      return c;
    }
  }
  c.detail = std::to_string(count) + " instances, sweeps <= n+1";
  return c;
}

Check lis_proposition1_all_cuts(int count, int max_n, u64 seed) {
  Check c;
  c.name = "lis-split-at-every-cut";
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    const i64 n = 3 + static_cast<i64>(rng.next_below(static_cast<u64>(std::max(1, max_n - 2))));
    const u64 s = rng.next();
    const auto a = gen_sequence(n, -50, 50, s);
    const i64 expect = dp::lis(a, ExecPolicy::seq());
    for (i64 cut = 2; cut < n; ++cut) {
      if (dp::lis_at_cut(a, cut, ExecPolicy::par(4)) != expect) {
        c.pass = false;
        c.detail = seed_msg(s) + ", cut " + std::to_string(cut);
        return c;
      }
    }
  }
  c.detail = std::to_string(count) + " sequences, n <= " + std::to_string(max_n) +
             ", every cut";
  return c;
}

Check blocked_selection_vs_scan(int vectors, u64 seed) {
  Check c;
  c.name = "blocked-min-select-vs-scan";
  SplitMix64 rng(seed);
  for (int it = 0; it < vectors; ++it) {
    const i64 n = 1 + static_cast<i64>(rng.next_below(200));
    const i64 p = static_cast<i64>(rng.next_below(static_cast<u64>(n)));
    greedy::GreedyState st;
    st.nd.resize(n);
    for (i64 i = 0; i < n; ++i) st.nd[i] = static_cast<int>(i);
    for (i64 i = n - 1; i > 0; --i) {
      const i64 j = static_cast<i64>(rng.next_below(static_cast<u64>(i) + 1));
      std::swap(st.nd[i], st.nd[j]);
    }
    st.d.resize(n);
    for (i64 i = 0; i < n; ++i) st.d[i] = rng.next_in(0, 30);  // many ties
    i64 expect = p;
    for (i64 i = p + 1; i < n; ++i)
      if (st.d[st.nd[i]] < st.d[st.nd[expect]]) expect = i;
    const i64 frontier = n - p;
    for (i64 b : {i64{1}, i64{2}, i64{3}, i64{8}, frontier}) {
      ExecPolicy pol = ExecPolicy::par(4, static_cast<int>(b));
      if (greedy::blocked_min_select(st, p, pol) != expect) {
        c.pass = false;
        c.detail = "vector " + std::to_string(it) + ", b=" + std::to_string(b) +
                   ", p=" + std::to_string(p);
        return c;
      }
    }
  }
  c.detail = std::to_string(vectors) + " key vectors, b in {1,2,3,8,frontier}";
  return c;
}

Check warshall_triangle_and_idempotence(int count, int max_n, u64 seed) {
  Check c;
  c.name = "warshall-triangle-and-idempotence";
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    u64 s = 0;
    const auto g = random_graph(rng, max_n, s, /*allow_directed=*/true);
    const auto d = dp::floyd_warshall(to_dense(g), ExecPolicy::par(4));
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j)
        for (int k = 0; k < d.n; ++k)
          if (d.at(i, j) > sat_add(d.at(i, k), d.at(k, j))) {
            c.pass = false;
            c.detail = seed_msg(s) + ": triangle inequality violated at (" +
                       std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                       ")";
            return c;
          }
    if (dp::floyd_warshall(d, ExecPolicy::seq()) != d) {
      c.pass = false;
      c.detail = seed_msg(s) + ": not idempotent";
      return c;
    }
  }
  c.detail = std::to_string(count) + " graphs, n <= " + std::to_string(max_n);
  return c;
}

Check dijkstra_vs_warshall_row(int count, int max_n, u64 seed) {
  Check c;
  c.name = "dijkstra-vs-warshall-row";
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    u64 s = 0;
    const auto g = random_graph(rng, max_n, s, /*allow_directed=*/true);
    const auto all = dp::floyd_warshall(to_dense(g), ExecPolicy::seq());
    const int src = static_cast<int>(rng.next_below(static_cast<u64>(g.n)));
    const auto d = greedy::dijkstra(g, src, ExecPolicy::par(4));
    for (int j = 0; j < g.n; ++j)
      if (d[j] != all.at(src, j)) {
        c.pass = false;
        c.detail = seed_msg(s) + ", source " + std::to_string(src);
        return c;
      }
  }
  c.detail = std::to_string(count) + " graphs, n <= " + std::to_string(max_n);
  return c;
}

namespace {

// Flattened, comparable output of one kernel run on one instance.
using Runner = std::function<dp::DpResult(const ExecPolicy&)>;

dp::DpResult from_value(i64 v) {
  dp::DpResult r;
  r.value = v;
  return r;
}

dp::DpResult from_state(const greedy::GreedyState& st) {
  dp::DpResult r;
  std::vector<i64> flat;
  flat.reserve(st.nd.size() * 4);
  for (int x : st.nd) flat.push_back(x);
  for (i64 x : st.d) flat.push_back(x);
  for (auto x : st.sel) flat.push_back(x);
  for (int x : st.parent) flat.push_back(x);
  r.vec = std::move(flat);
  return r;
}

struct InvarianceCase {
  u64 inst_seed = 0;
  Runner run;
};

// One instance per index; index 0 is the largest ("desk-size cap") one.
InvarianceCase make_case(const std::string& kernel, int index, SplitMix64& rng, int dense_cap,
                         int sparse_cap) {
  InvarianceCase cs;
  const bool big = index == 0;
  if (kernel == "knapsack") {
    const int n = big ? 1000 : 1 + static_cast<int>(rng.next_below(256));
    const i64 cap = big ? 10'000 : rng.next_in(0, 10 * n);
    cs.inst_seed = rng.next();
    auto inst = std::make_shared<KnapsackInstance>(gen_knapsack(n, 50, 50, cap, cs.inst_seed));
    cs.run = [inst](const ExecPolicy& p) { return from_value(dp::knapsack(*inst, p)); };
  } else if (kernel == "warshall") {
    u64 s = 0;
    auto g = big ? gen_graph(dense_cap, 4, 12, 1, 100, s = rng.next())
                 : random_graph(rng, std::min(128, dense_cap), s, true);
    cs.inst_seed = s;
    auto m = std::make_shared<DenseMatrix>(to_dense(g));
    cs.run = [m](const ExecPolicy& p) {
      dp::DpResult r;
      r.matrix = dp::floyd_warshall(*m, p);
      return r;
    };
  } else if (kernel == "berge") {
    u64 s = 0, cseed = 0;
    auto g = big ? gen_graph(dense_cap, 4, 12, 1, 100, s = rng.next())
                 : random_graph(rng, std::min(128, dense_cap), s, false);
    cs.inst_seed = s;
    auto inst = std::make_shared<FloodingInstance>(make_flooding(g, random_ceiling(rng, g.n, cseed)));
    cs.run = [inst](const ExecPolicy& p) {
      const auto f = dp::berge_flood(*inst, p);
      dp::DpResult r;
      r.vec = f.tau;
      r.iterations = f.sweeps;
      return r;
    };
  } else if (kernel == "lcs") {
    const i64 len_cap = big ? dense_cap : 256;
    const i64 ns = big ? len_cap : static_cast<i64>(rng.next_below(static_cast<u64>(len_cap) + 1));
    const i64 nt = big ? len_cap : static_cast<i64>(rng.next_below(static_cast<u64>(len_cap) + 1));
    const u64 s1 = rng.next(), s2 = rng.next();
    cs.inst_seed = s1;
    auto s = std::make_shared<Sequence>(gen_sequence(ns, 0, 3, s1));
    auto t = std::make_shared<Sequence>(gen_sequence(nt, 0, 3, s2));
    cs.run = [s, t](const ExecPolicy& p) { return from_value(dp::lcs(*s, *t, p)); };
  } else if (kernel == "lis") {
    const i64 n = big ? sparse_cap : static_cast<i64>(rng.next_below(1025));
    cs.inst_seed = rng.next();
    auto a = std::make_shared<Sequence>(gen_sequence(n, 0, 1'000'000, cs.inst_seed));
    cs.run = [a](const ExecPolicy& p) { return from_value(dp::lis(*a, p)); };
  } else if (kernel == "dijkstra") {
    u64 s = 0;
    auto g = big ? gen_graph(sparse_cap, 10, 20, 1, 1000, s = rng.next())
                 : random_graph(rng, 2000, s, true);
    cs.inst_seed = s;
    const int src = static_cast<int>(rng.next_below(static_cast<u64>(g.n)));
    auto gp = std::make_shared<WeightedGraph>(std::move(g));
    cs.run = [gp, src](const ExecPolicy& p) {
      return from_state(greedy::dijkstra_state(*gp, src, p));
    };
  } else if (kernel == "mst") {
    u64 s = 0;
    auto g = big ? gen_graph(sparse_cap, 10, 20, 1, 1000, s = rng.next())
                 : random_graph(rng, 2000, s, false);
    cs.inst_seed = s;
    auto gp = std::make_shared<WeightedGraph>(std::move(g));
    cs.run = [gp](const ExecPolicy& p) {
      const auto res = greedy::prim(*gp, p);
      dp::DpResult r;
      r.value = res.total;
      std::vector<i64> flat(res.parent.begin(), res.parent.end());
      flat.push_back(res.connected ? 1 : 0);
      r.vec = std::move(flat);
      return r;
    };
  } else if (kernel == "mdflood") {
    u64 s = 0, cseed = 0;
    auto g = big ? gen_graph(sparse_cap, 10, 20, 1, 1000, s = rng.next())
                 : random_graph(rng, 2000, s, false);
    cs.inst_seed = s;
    auto ceiling = std::make_shared<std::vector<i64>>(random_ceiling(rng, g.n, cseed));
    auto gp = std::make_shared<WeightedGraph>(std::move(g));
    cs.run = [gp, ceiling](const ExecPolicy& p) {
      return from_state(greedy::moore_dijkstra_flood_state(*gp, *ceiling, p));
    };
  } else {
    throw std::invalid_argument("unknown kernel: " + kernel);
  }
  return cs;
}

}  // namespace

Check policy_invariance(const std::string& kernel, int count, const std::vector<int>& workers,
                        u64 seed) {
  Check c;
  c.name = "policy-invariance/" + kernel;
  SplitMix64 rng(seed);
  for (int it = 0; it < count; ++it) {
    auto cs = make_case(kernel, it, rng, 512, 10'000);
    const auto expect = cs.run(ExecPolicy::seq());
    // Also vary block count and chunk so the selection/update paths differ.
    const int blocks = (it % 3 == 1) ? 3 : 0;
    const int chunk = (it % 5 == 4) ? 1 : 64;
    for (int w : workers) {
      if (cs.run(ExecPolicy::par(w, blocks, chunk)) != expect) {
        c.pass = false;
        c.detail = seed_msg(cs.inst_seed) + ": Parallel(" + std::to_string(w) +
                   ") differs from Sequential";
        return c;
      }
    }
  }
  c.detail = std::to_string(count) + " instances, workers {1,2,4,8}";
  return c;
}

const std::vector<std::string>& kernel_ids() {
  static const std::vector<std::string> ids = {"knapsack", "warshall", "berge", "lcs",
                                               "lis",      "dijkstra", "mst",   "mdflood"};
  return ids;
}

Report run(const std::string& kernel, const Options& opt) {
  Report rep;
  const auto want = [&](const std::string& id) { return kernel == "all" || kernel == id; };
  const int count = opt.count;
  const auto n_or = [&](int def) { return opt.max_n > 0 ? std::min(opt.max_n, def) : def; };
  const auto cnt_or = [&](int def) { return count > 0 ? count : def; };
  bool known = kernel == "all";

  if (want("knapsack")) {
    known = true;
    if (opt.max_n > 24) throw std::invalid_argument("knapsack oracle bound is n <= 24");
    rep.checks.push_back(knapsack_vs_exhaustive(cnt_or(50), n_or(20), opt.seed));
    rep.checks.push_back(policy_invariance("knapsack", cnt_or(100), opt.workers, opt.seed + 1));
  }
  if (want("warshall")) {
    known = true;
    rep.checks.push_back(warshall_triangle_and_idempotence(cnt_or(50), n_or(64), opt.seed + 2));
    rep.checks.push_back(policy_invariance("warshall", cnt_or(100), opt.workers, opt.seed + 3));
  }
  if (want("berge")) {
    known = true;
    rep.checks.push_back(berge_fixpoint_and_mdflood(cnt_or(100), n_or(128), opt.seed + 4));
    rep.checks.push_back(berge_sweep_bound(cnt_or(100), n_or(128), opt.seed + 5));
    rep.checks.push_back(policy_invariance("berge", cnt_or(100), opt.workers, opt.seed + 6));
  }
  if (want("lcs")) {
    known = true;
    if (opt.max_n > 14) throw std::invalid_argument("lcs oracle bound is length <= 14");
    rep.checks.push_back(lcs_vs_exhaustive(cnt_or(200), n_or(12), opt.seed + 7));
    rep.checks.push_back(policy_invariance("lcs", cnt_or(100), opt.workers, opt.seed + 8));
  }
  if (want("lis")) {
    known = true;
    if (opt.max_n > 18) throw std::invalid_argument("lis oracle bound is n <= 18");
    rep.checks.push_back(lis_vs_exhaustive(cnt_or(200), n_or(18), opt.seed + 9));
    rep.checks.push_back(lis_proposition1_all_cuts(cnt_or(100), 64, opt.seed + 10));
    rep.checks.push_back(policy_invariance("lis", cnt_or(100), opt.workers, opt.seed + 11));
  }
  if (want("dijkstra")) {
    known = true;
    rep.checks.push_back(dijkstra_vs_bellman(cnt_or(100), n_or(256), opt.seed + 12));
    rep.checks.push_back(dijkstra_vs_warshall_row(cnt_or(50), n_or(128), opt.seed + 13));
    rep.checks.push_back(blocked_selection_vs_scan(cnt_or(1000), opt.seed + 14));
    rep.checks.push_back(policy_invariance("dijkstra", cnt_or(100), opt.workers, opt.seed + 15));
  }
  if (want("mst")) {
    known = true;
    rep.checks.push_back(prim_vs_kruskal(cnt_or(100), n_or(256), opt.seed + 16));
    rep.checks.push_back(policy_invariance("mst", cnt_or(100), opt.workers, opt.seed + 17));
  }
  if (want("mdflood")) {
    known = true;
    if (kernel == "mdflood")
      rep.checks.push_back(berge_fixpoint_and_mdflood(cnt_or(100), n_or(128), opt.seed + 4));
    rep.checks.push_back(policy_invariance("mdflood", cnt_or(100), opt.workers, opt.seed + 18));
  }
  if (!known) throw std::invalid_argument("unknown kernel: " + kernel);
  return rep;
}

bool print_report(std::ostream& out, const Report& report) {
  for (const auto& c : report.checks) {
    if (c.pass)
      out << "[PASS] " << c.name << " (" << c.detail << ")\n";
    else
      out << "[FAIL] " << c.name << ": " << c.detail << "\n";
  }
  return report.ok();
}

}  // namespace para::verify
