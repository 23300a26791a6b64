#include "para/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace para {

namespace {

// Line-oriented tokenizer that tracks the line number for error messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split into tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, what); }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

i64 parse_int(const LineReader& r, const std::string& tok) {
  i64 value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(r.line(), "expected integer, got '" + tok + "'");
  return value;
}

void expect_tokens(const LineReader& r, const std::vector<std::string>& tokens, size_t n,
                   const char* what) {
  if (tokens.size() != n) r.fail(std::string("expected ") + what);
}

}  // namespace

void write_instance(std::ostream& out, const WeightedGraph& g) {
  out << "graph " << g.n << ' ' << (g.undirected ? "undirected" : "directed") << '\n';
  for (int i = 0; i < g.n; ++i) {
    for (size_t k = 0; k < g.adj[i].size(); ++k) {
      const int j = g.adj[i][k];
      if (g.undirected && j < i) continue;  // each undirected edge once
      out << i << ' ' << j << ' ' << g.w[i][k] << '\n';
    }
  }
}

void write_instance(std::ostream& out, const KnapsackInstance& inst) {
  out << "knapsack " << inst.n() << ' ' << inst.capacity << '\n';
  for (int i = 0; i < inst.n(); ++i) out << inst.v[i] << ' ' << inst.w[i] << '\n';
}

void write_instance(std::ostream& out, const Sequence& s) {
  out << "sequence " << s.n() << '\n';
  for (i64 x : s.items) out << x << '\n';
}

void write_instance(const std::string& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  std::visit([&](const auto& x) { write_instance(out, x); }, inst);
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

WeightedGraph read_graph_body(LineReader& r, const std::vector<std::string>& header) {
  expect_tokens(r, header, 3, "header 'graph <n> <undirected|directed>'");
  WeightedGraph g;
  const i64 n = parse_int(r, header[1]);
  if (n < 0 || n > (i64{1} << 31)) r.fail("bad vertex count");
  if (header[2] == "undirected")
    g.undirected = true;
  else if (header[2] == "directed")
    g.undirected = false;
  else
    r.fail("expected 'undirected' or 'directed'");
  g.n = static_cast<int>(n);
  g.adj.resize(g.n);
  g.w.resize(g.n);
  std::vector<std::string> tokens;
  while (r.next(tokens)) {
    expect_tokens(r, tokens, 3, "edge 'i j w'");
    const i64 a = parse_int(r, tokens[0]);
    const i64 b = parse_int(r, tokens[1]);
    const i64 weight = parse_int(r, tokens[2]);
    if (a < 0 || a >= n || b < 0 || b >= n) r.fail("edge endpoint out of range");
    if (a == b) r.fail("self-loop");
    if (weight < 0 || weight > kMaxFinite) r.fail("edge weight out of range");
    g.adj[a].push_back(static_cast<int>(b));
    g.w[a].push_back(weight);
    if (g.undirected) {
      g.adj[b].push_back(static_cast<int>(a));
      g.w[b].push_back(weight);
    }
  }
  g.deg.resize(g.n);
  for (int i = 0; i < g.n; ++i) g.deg[i] = static_cast<int>(g.adj[i].size());
  return g;
}

KnapsackInstance read_knapsack_body(LineReader& r, const std::vector<std::string>& header) {
  expect_tokens(r, header, 3, "header 'knapsack <n> <W>'");
  const i64 n = parse_int(r, header[1]);
  const i64 cap = parse_int(r, header[2]);
  if (n < 0) r.fail("bad item count");
  if (cap < 0) r.fail("bad capacity");
  KnapsackInstance inst;
  inst.capacity = cap;
  std::vector<std::string> tokens;
  for (i64 i = 0; i < n; ++i) {
    if (!r.next(tokens)) throw ParseError(r.line() + 1, "truncated: expected item 'v w'");
    expect_tokens(r, tokens, 2, "item 'v w'");
    const i64 v = parse_int(r, tokens[0]);
    const i64 w = parse_int(r, tokens[1]);
    if (v < 1 || w < 1) r.fail("item values and weights must be >= 1");
    inst.v.push_back(v);
    inst.w.push_back(w);
  }
  if (r.next(tokens)) r.fail("trailing data after last item");
  return inst;
}

Sequence read_sequence_body(LineReader& r, const std::vector<std::string>& header) {
  expect_tokens(r, header, 2, "header 'sequence <n>'");
  const i64 n = parse_int(r, header[1]);
  if (n < 0) r.fail("bad length");
  Sequence s;
  s.items.reserve(static_cast<size_t>(n));
  std::vector<std::string> tokens;
  for (i64 i = 0; i < n; ++i) {
    if (!r.next(tokens)) throw ParseError(r.line() + 1, "truncated: expected value");
    expect_tokens(r, tokens, 1, "single value");
    s.items.push_back(parse_int(r, tokens[0]));
  }
  if (r.next(tokens)) r.fail("trailing data after last value");
  return s;
}

Instance read_any(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> header;
  if (!r.next(header)) throw ParseError(1, "empty file");
  if (header[0] == "graph") return read_graph_body(r, header);
  if (header[0] == "knapsack") return read_knapsack_body(r, header);
  if (header[0] == "sequence") return read_sequence_body(r, header);
  r.fail("unknown instance kind '" + header[0] + "'");
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  auto inst = read_any(in);
  if (auto* g = std::get_if<WeightedGraph>(&inst)) return std::move(*g);
  throw ParseError(1, "expected a graph instance");
}

KnapsackInstance read_knapsack(std::istream& in) {
  auto inst = read_any(in);
  if (auto* k = std::get_if<KnapsackInstance>(&inst)) return std::move(*k);
  throw ParseError(1, "expected a knapsack instance");
}

Sequence read_sequence(std::istream& in) {
  auto inst = read_any(in);
  if (auto* s = std::get_if<Sequence>(&inst)) return std::move(*s);
  throw ParseError(1, "expected a sequence instance");
}

Instance read_instance(std::istream& in) { return read_any(in); }

Instance read_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_any(in);
}

}  // namespace para
