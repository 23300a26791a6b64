#include "para/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "para/bench.hpp"
#include "para/instance_io.hpp"
#include "para/instances.hpp"
#include "para/verify.hpp"

namespace para::cli {

namespace {

std::pair<i64, i64> parse_range(const std::string& s, const char* what) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError(std::string(what) + " must be 'lo:hi', got '" + s + "'");
  try {
    return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + " must be 'lo:hi', got '" + s + "'");
  }
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) + ": bad integer '" + tok + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

struct GenArgs {
  std::string kind;
  i64 n = 0;
  std::string deg = "10:20";
  std::string weights = "1:100";
  std::string values = "0:100";
  i64 cap = -1;  // -1 -> 10n
  i64 wmax = 100, vmax = 100;
  bool directed = false;
  u64 seed = 1;
  std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Instance inst;
  if (a.kind == "graph") {
    const auto [dlo, dhi] = parse_range(a.deg, "--deg");
    const auto [wlo, whi] = parse_range(a.weights, "--w");
    inst = gen_graph(static_cast<int>(a.n), static_cast<int>(dlo), static_cast<int>(dhi), wlo,
                     whi, a.seed, !a.directed);
    const auto& g = std::get<WeightedGraph>(inst);
    i64 edges = 0;
    for (int i = 0; i < g.n; ++i) edges += g.deg[i];
    if (g.undirected) edges /= 2;
    write_instance(a.out_path, inst);
    out << "graph n=" << g.n << " edges=" << edges << " seed=" << a.seed << " -> " << a.out_path
        << "\n";
  } else if (a.kind == "knapsack") {
    const i64 cap = a.cap >= 0 ? a.cap : 10 * a.n;
    inst = gen_knapsack(static_cast<int>(a.n), a.wmax, a.vmax, cap, a.seed);
    write_instance(a.out_path, inst);
    out << "knapsack n=" << a.n << " W=" << cap << " seed=" << a.seed << " -> " << a.out_path
        << "\n";
  } else if (a.kind == "sequence") {
    const auto [vlo, vhi] = parse_range(a.values, "--values");
    inst = gen_sequence(a.n, vlo, vhi, a.seed);
    write_instance(a.out_path, inst);
    out << "sequence n=" << a.n << " seed=" << a.seed << " -> " << a.out_path << "\n";
  } else {
    throw CLI::ValidationError("unknown kind '" + a.kind + "' (graph|knapsack|sequence)");
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"parallel dynamic-programming and greedy kernel toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "graph|knapsack|sequence")->required();
  gen_cmd->add_option("--n", gen.n, "size (vertices, items or length)")->required();
  gen_cmd->add_option("--deg", gen.deg, "degree range lo:hi (graph)");
  gen_cmd->add_option("--w", gen.weights, "weight range lo:hi (graph)");
  gen_cmd->add_option("--values", gen.values, "value range lo:hi (sequence)");
  gen_cmd->add_option("--cap", gen.cap, "knapsack capacity W (default 10n)");
  gen_cmd->add_option("--wmax", gen.wmax, "knapsack max item weight");
  gen_cmd->add_option("--vmax", gen.vmax, "knapsack max item value");
  gen_cmd->add_flag("--directed", gen.directed, "directed graph");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--out", gen.out_path, "output file")->required();

  std::string verify_kernel = "all";
  verify::Options vopt;
  std::string verify_workers;
  auto* verify_cmd = app.add_subcommand("verify", "check kernels against oracles and policies");
  verify_cmd->add_option("kernel", verify_kernel, "kernel id or 'all'");
  verify_cmd->add_option("--n", vopt.max_n, "max instance size (within oracle bounds)");
  verify_cmd->add_option("--count", vopt.count, "instances per check");
  verify_cmd->add_option("--seed", vopt.seed, "suite seed");
  verify_cmd->add_option("--workers", verify_workers, "worker counts, e.g. 1,2,4,8");

  bench::BenchConfig bcfg;
  std::string bench_kernel = "all";
  std::string bench_workers;
  std::string bench_deg = "10:20";
  std::string bench_format = "md";
  std::string bench_out = "bench_out";
  auto* bench_cmd = app.add_subcommand("bench", "measure speedups and emit report tables");
  bench_cmd->add_option("--kernel", bench_kernel, "kernel id or 'all'");
  bench_cmd->add_option("--n", bcfg.n, "instance size (default: per-kernel preset)");
  bench_cmd->add_option("--cap", bcfg.cap, "knapsack capacity W");
  bench_cmd->add_option("--deg", bench_deg, "graph degree range lo:hi");
  bench_cmd->add_option("--workers", bench_workers, "worker counts, e.g. 2,4,8");
  bench_cmd->add_option("--blocks", bcfg.blocks, "selection block count (default: workers)");
  bench_cmd->add_option("--chunk", bcfg.chunk, "adaptive update chunk size");
  bench_cmd->add_option("--seed", bcfg.seed, "instance seed");
  bench_cmd->add_option("--reps", bcfg.reps, "timed repetitions per point");
  bench_cmd->add_option("--warmups", bcfg.warmups, "untimed warmup runs");
  bench_cmd->add_option("--format", bench_format, "stdout format: csv|md|json")
      ->check(CLI::IsMember({"csv", "md", "json"}));
  bench_cmd->add_option("--out", bench_out, "output directory");
  bench_cmd->add_flag("--desk", bcfg.desk, "scaled-down sizes that finish in minutes");

  std::string tune_kernel = "mst";
  std::string tune_chunks = "16,64,256";
  bench::BenchConfig tcfg;
  std::string tune_workers;
  std::string tune_deg = "10:20";
  auto* tune_cmd = app.add_subcommand("tune-chunk", "pick the best update chunk size");
  tune_cmd->add_option("--kernel", tune_kernel, "mst|dijkstra|mdflood");
  tune_cmd->add_option("--chunks", tune_chunks, "candidate chunk sizes, e.g. 16,64,256");
  tune_cmd->add_option("--n", tcfg.n, "graph size");
  tune_cmd->add_option("--deg", tune_deg, "graph degree range lo:hi");
  tune_cmd->add_option("--workers", tune_workers, "worker counts; max is used");
  tune_cmd->add_option("--seed", tcfg.seed, "instance seed");
  tune_cmd->add_option("--reps", tcfg.reps, "timed repetitions per candidate");
  tune_cmd->add_option("--warmups", tcfg.warmups, "untimed warmup runs");
  tune_cmd->add_flag("--desk", tcfg.desk, "scaled-down default size");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);

    if (verify_cmd->parsed()) {
      if (!verify_workers.empty()) vopt.workers = parse_int_list(verify_workers, "--workers");
      const auto report = verify::run(verify_kernel, vopt);
      const bool ok = verify::print_report(out, report);
      out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
      return ok ? 0 : 1;
    }

    if (bench_cmd->parsed()) {
      if (bench_kernel != "all") {
        const auto k = bench::kernel_from_id(bench_kernel);
        if (!k)
          throw CLI::ValidationError("unknown bench kernel '" + bench_kernel +
                                     "' (knapsack|warshall|berge|lcs|lis|mst)");
        bcfg.kernels = {*k};
      }
      const auto [dlo, dhi] = parse_range(bench_deg, "--deg");
      bcfg.deg_lo = static_cast<int>(dlo);
      bcfg.deg_hi = static_cast<int>(dhi);
      if (!bench_workers.empty()) bcfg.workers = parse_int_list(bench_workers, "--workers");
      const auto report = bench::run_bench(bcfg);

      std::filesystem::create_directories(bench_out);
      const std::string md = bench::to_markdown(report);
      const std::string csv = bench::to_csv(report);
      const std::string jsonl = bench::to_jsonl(report);
      write_file(bench_out + "/bench.md", md);
      write_file(bench_out + "/bench.csv", csv);
      write_file(bench_out + "/bench.jsonl", jsonl);
      out << (bench_format == "csv" ? csv : bench_format == "json" ? jsonl : md);

      for (const auto& row : report.rows)
        if (!row.invariance_ok) {
          err << "bench: policy invariance failed for " << row.kernel << " n=" << row.n << "\n";
          return 1;
        }
      return 0;
    }

    if (tune_cmd->parsed()) {
      const auto [dlo, dhi] = parse_range(tune_deg, "--deg");
      tcfg.deg_lo = static_cast<int>(dlo);
      tcfg.deg_hi = static_cast<int>(dhi);
      if (!tune_workers.empty()) tcfg.workers = parse_int_list(tune_workers, "--workers");
      const auto res = bench::tune_chunk(tune_kernel, parse_int_list(tune_chunks, "--chunks"), tcfg);
      out << "chunk,median_s\n";
      for (const auto& [c, t] : res.timings) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%d,%.6f", c, t);
        out << buf << "\n";
      }
      out << "best chunk: " << res.best_chunk << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace para::cli
