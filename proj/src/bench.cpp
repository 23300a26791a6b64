#include "para/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "para/dp_kernels.hpp"
#include "para/greedy_kernels.hpp"
#include "para/instances.hpp"
#include "para/parallel.hpp"
#include "para/rng.hpp"

namespace para::bench {

const std::vector<Kernel>& all_kernels() {
  static const std::vector<Kernel> ks = {Kernel::Knapsack, Kernel::Warshall, Kernel::Lis,
                                         Kernel::Lcs,      Kernel::Berge,    Kernel::Mst};
  return ks;
}

std::string kernel_label(Kernel k) {
  switch (k) {
    case Kernel::Knapsack: return "KNAPSACK";
    case Kernel::Warshall: return "WARSHALL";
    case Kernel::Berge: return "BERGE";
    case Kernel::Lcs: return "LCS";
    case Kernel::Lis: return "LIS";
    case Kernel::Mst: return "MST";
  }
  return "?";
}

std::optional<Kernel> kernel_from_id(const std::string& id) {
  if (id == "knapsack") return Kernel::Knapsack;
  if (id == "warshall") return Kernel::Warshall;
  if (id == "berge") return Kernel::Berge;
  if (id == "lcs") return Kernel::Lcs;
  if (id == "lis") return Kernel::Lis;
  if (id == "mst" || id == "prim") return Kernel::Mst;
  return std::nullopt;
}

int physical_cores() {
  // Unique (physical id, core id) pairs; falls back to the logical count.
  std::ifstream in("/proc/cpuinfo");
  std::set<std::pair<int, int>> cores;
  int phys = -1, core = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("physical id", 0) == 0)
      phys = std::atoi(line.substr(line.find(':') + 1).c_str());
    else if (line.rfind("core id", 0) == 0)
      core = std::atoi(line.substr(line.find(':') + 1).c_str());
    else if (line.empty() && phys >= 0 && core >= 0) {
      cores.insert({phys, core});
      phys = core = -1;
    }
  }
  if (phys >= 0 && core >= 0) cores.insert({phys, core});
  if (!cores.empty()) return static_cast<int>(cores.size());
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<int> default_worker_sweep() {
  const int cap = [] {
    if (const char* env = std::getenv("PARA_WORKERS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 8;
  }();
  if (cap < 2) return {1};
  std::vector<int> ws;
  for (int w = 2; w <= cap; ++w) ws.push_back(w);
  return ws;
}

double time_median_s(int warmups, int reps, const std::function<void()>& fn) {
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < warmups; ++i) fn();
  std::vector<double> times;
  times.reserve(reps);
  for (int i = 0; i < reps; ++i) {
    const auto t0 = clock::now();
    fn();
    const auto t1 = clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  const size_t m = times.size() / 2;
  return times.size() % 2 ? times[m] : (times[m - 1] + times[m]) / 2;
}

namespace {

struct Driver {
  std::string label;
  i64 n = 0;
  // Runs the kernel once; the returned result is used for the one-off
  // policy-invariance recheck before any timing.
  std::function<dp::DpResult(const ExecPolicy&)> run;
};

i64 preset_n(Kernel k, bool desk) {
  switch (k) {
    case Kernel::Knapsack: return desk ? 4'000 : 10'000;
    case Kernel::Warshall: return desk ? 512 : 1'000;
    case Kernel::Berge: return desk ? 1'024 : 1'000;
    case Kernel::Lcs: return desk ? 4'096 : 10'000;
    case Kernel::Lis: return desk ? 4'096 : 10'000;
    case Kernel::Mst: return desk ? 20'000 : 100'000;
  }
  return 0;
}

Driver make_driver(Kernel k, const BenchConfig& cfg) {
  Driver d;
  d.label = kernel_label(k);
  d.n = cfg.n > 0 ? cfg.n : preset_n(k, cfg.desk);
  const i64 n = d.n;
  SplitMix64 rng(cfg.seed);
  switch (k) {
    case Kernel::Knapsack: {
      const i64 cap = cfg.cap > 0 ? cfg.cap : 10 * n;
      auto inst = std::make_shared<KnapsackInstance>(
          gen_knapsack(static_cast<int>(n), 100, 100, cap, rng.next()));
      d.run = [inst](const ExecPolicy& p) {
        dp::DpResult r;
        r.value = dp::knapsack(*inst, p);
        return r;
      };
      break;
    }
    case Kernel::Warshall: {
      auto g = gen_graph(static_cast<int>(n), cfg.deg_lo, cfg.deg_hi, 1, 1000, rng.next());
      auto m = std::make_shared<DenseMatrix>(to_dense(g));
      d.run = [m](const ExecPolicy& p) {
        dp::DpResult r;
        r.matrix = dp::floyd_warshall(*m, p);
        return r;
      };
      break;
    }
    case Kernel::Berge: {
      auto g = gen_graph(static_cast<int>(n), cfg.deg_lo, cfg.deg_hi, 1, 1000, rng.next());
      auto ceiling = gen_sequence(n, 0, 1'000'000, rng.next()).items;
      auto inst = std::make_shared<FloodingInstance>(make_flooding(g, std::move(ceiling)));
      d.run = [inst](const ExecPolicy& p) {
        const auto f = dp::berge_flood(*inst, p);
        dp::DpResult r;
        r.vec = f.tau;
        r.iterations = f.sweeps;
        return r;
      };
      break;
    }
    case Kernel::Lcs: {
      auto s = std::make_shared<Sequence>(gen_sequence(n, 0, cfg.alphabet - 1, rng.next()));
      auto t = std::make_shared<Sequence>(gen_sequence(n, 0, cfg.alphabet - 1, rng.next()));
      d.run = [s, t](const ExecPolicy& p) {
        dp::DpResult r;
        r.value = dp::lcs(*s, *t, p);
        return r;
      };
      break;
    }
    case Kernel::Lis: {
      auto a = std::make_shared<Sequence>(gen_sequence(n, 0, 1'000'000, rng.next()));
      d.run = [a](const ExecPolicy& p) {
        dp::DpResult r;
        r.value = dp::lis(*a, p);
        return r;
      };
      break;
    }
    case Kernel::Mst: {
      auto g = std::make_shared<WeightedGraph>(
          gen_graph(static_cast<int>(n), cfg.deg_lo, cfg.deg_hi, 1, 1000, rng.next()));
      d.run = [g](const ExecPolicy& p) {
        auto res = greedy::prim(*g, p);
        dp::DpResult r;
        r.value = res.total;
        r.vec = std::vector<i64>(res.parent.begin(), res.parent.end());
        return r;
      };
      break;
    }
  }
  return d;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
  if (cfg.reps < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
  BenchReport rep;
  rep.logical_cores = static_cast<int>(std::thread::hardware_concurrency());
  rep.physical_cores = physical_cores();
  rep.timestamp = utc_timestamp();
  rep.seed = cfg.seed;
  const std::vector<int> workers = cfg.workers.empty() ? default_worker_sweep() : cfg.workers;
  if (workers.empty()) throw std::invalid_argument("bench: worker list must be nonempty");

  for (Kernel k : cfg.kernels) {
    const Driver d = make_driver(k, cfg);
    BenchRow row;
    row.kernel = d.label;
    row.n = d.n;

    // Timing must not depend on a broken kernel: recheck invariance once.
    const auto expect = d.run(ExecPolicy::seq());
    const int wmax = *std::max_element(workers.begin(), workers.end());
    row.invariance_ok = d.run(ExecPolicy::par(wmax, cfg.blocks, cfg.chunk)) == expect;
    if (!row.invariance_ok) {
      rep.rows.push_back(std::move(row));
      continue;
    }

    row.seq_median_s =
        time_median_s(cfg.warmups, cfg.reps, [&] { d.run(ExecPolicy::seq()); });
    for (int w : workers) {
      const ExecPolicy pol = ExecPolicy::par(w, cfg.blocks, cfg.chunk);
      WorkerTiming t;
      t.workers = w;
      t.median_s = time_median_s(cfg.warmups, cfg.reps, [&] { d.run(pol); });
      t.speedup = t.median_s > 0 ? row.seq_median_s / t.median_s : 0.0;
      row.timings.push_back(t);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string to_markdown(const BenchReport& rep) {
  std::ostringstream os;
  os << "Cores: " << rep.physical_cores << " physical / " << rep.logical_cores
     << " logical, seed " << rep.seed << ", " << rep.timestamp << "\n\n";
  std::vector<int> ws;
  for (const auto& row : rep.rows)
    for (const auto& t : row.timings)
      if (std::find(ws.begin(), ws.end(), t.workers) == ws.end()) ws.push_back(t.workers);
  std::sort(ws.begin(), ws.end());
  os << "| Problem | N | Seq T(s) |";
  for (int w : ws) os << ' ' << w << " |";
  os << "\n|---|---:|---:|";
  for (size_t i = 0; i < ws.size(); ++i) os << "---:|";
  os << "\n";
  for (const auto& row : rep.rows) {
    os << "| " << row.kernel << " | " << row.n << " | ";
    if (!row.invariance_ok) {
      os << "FAILED (policy invariance) |";
      for (size_t i = 0; i < ws.size(); ++i) os << " |";
      os << "\n";
      continue;
    }
    os << fmt(row.seq_median_s, 3) << " |";
    for (int w : ws) {
      const auto it = std::find_if(row.timings.begin(), row.timings.end(),
                                   [&](const WorkerTiming& t) { return t.workers == w; });
      if (it == row.timings.end())
        os << " |";
      else
        os << ' ' << fmt(it->speedup, 2) << " |";
    }
    os << "\n";
  }
  return os.str();
}

std::string to_csv(const BenchReport& rep) {
  std::ostringstream os;
  std::vector<int> ws;
  for (const auto& row : rep.rows)
    for (const auto& t : row.timings)
      if (std::find(ws.begin(), ws.end(), t.workers) == ws.end()) ws.push_back(t.workers);
  std::sort(ws.begin(), ws.end());
  os << "problem,n,seq_s";
  for (int w : ws) os << ",speedup_" << w;
  os << "\n";
  for (const auto& row : rep.rows) {
    os << row.kernel << ',' << row.n << ',';
    if (!row.invariance_ok) {
      os << "FAILED";
      for (size_t i = 0; i < ws.size(); ++i) os << ',';
      os << "\n";
      continue;
    }
    os << fmt(row.seq_median_s, 3);
    for (int w : ws) {
      const auto it = std::find_if(row.timings.begin(), row.timings.end(),
                                   [&](const WorkerTiming& t) { return t.workers == w; });
      os << ',';
      if (it != row.timings.end()) os << fmt(it->speedup, 2);
    }
    os << "\n";
  }
  return os.str();
}

std::string to_jsonl(const BenchReport& rep) {
  std::ostringstream os;
  for (const auto& row : rep.rows) {
    nlohmann::json j;
    j["kernel"] = row.kernel;
    j["n"] = row.n;
    j["timestamp"] = rep.timestamp;
    j["seed"] = rep.seed;
    j["physical_cores"] = rep.physical_cores;
    j["invariance_ok"] = row.invariance_ok;
    j["seq_median_s"] = row.seq_median_s;
    nlohmann::json timings = nlohmann::json::array();
    for (const auto& t : row.timings)
      timings.push_back({{"workers", t.workers}, {"median_s", t.median_s}, {"speedup", t.speedup}});
    j["timings"] = timings;
    os << j.dump() << "\n";
  }
  return os.str();
}

TuneResult tune_chunk(const std::string& kernel_id, const std::vector<int>& chunks,
                      const BenchConfig& cfg) {
  if (chunks.empty()) throw std::invalid_argument("tune-chunk: empty candidate list");
  const i64 n = cfg.n > 0 ? cfg.n : (cfg.desk ? 20'000 : 100'000);
  SplitMix64 rng(cfg.seed);
  const auto g = std::make_shared<WeightedGraph>(
      gen_graph(static_cast<int>(n), cfg.deg_lo, cfg.deg_hi, 1, 1000, rng.next()));
  std::function<void(const ExecPolicy&)> run;
  if (kernel_id == "mst") {
    run = [g](const ExecPolicy& p) { greedy::prim(*g, p); };
  } else if (kernel_id == "dijkstra") {
    run = [g](const ExecPolicy& p) { greedy::dijkstra(*g, 0, p); };
  } else if (kernel_id == "mdflood") {
    auto ceiling =
        std::make_shared<std::vector<i64>>(gen_sequence(n, 0, 1'000'000, rng.next()).items);
    run = [g, ceiling](const ExecPolicy& p) { greedy::moore_dijkstra_flood(*g, *ceiling, p); };
  } else {
    throw std::invalid_argument("tune-chunk: no adaptive update step in kernel '" + kernel_id +
                                "'");
  }
  const int w = [&] {
    if (!cfg.workers.empty()) return *std::max_element(cfg.workers.begin(), cfg.workers.end());
    return default_workers();
  }();
  TuneResult res;
  for (int c : chunks) {
    if (c < 1) throw std::invalid_argument("tune-chunk: chunk must be >= 1");
    const ExecPolicy pol = ExecPolicy::par(w, cfg.blocks, c);
    res.timings.emplace_back(c, time_median_s(cfg.warmups, cfg.reps, [&] { run(pol); }));
  }
  res.best_chunk =
      std::min_element(res.timings.begin(), res.timings.end(),
                       [](const auto& a, const auto& b) { return a.second < b.second; })
          ->first;
  return res;
}

}  // namespace para::bench
