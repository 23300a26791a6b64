#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "para/instances.hpp"

namespace para {

// Text instance files: a header line `kind n [W|flags]`, then one record
// per line. UTF-8, LF, base-10.
//   graph <n> <undirected|directed>   edges `i j w` (one line per edge)
//   knapsack <n> <W>                  items `v w`
//   sequence <n>                      one value per line
// Reading a written file reproduces the instance byte-for-byte on
// re-serialization.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using Instance = std::variant<WeightedGraph, KnapsackInstance, Sequence>;

void write_instance(std::ostream& out, const WeightedGraph& g);
void write_instance(std::ostream& out, const KnapsackInstance& inst);
void write_instance(std::ostream& out, const Sequence& s);
void write_instance(const std::string& path, const Instance& inst);

WeightedGraph read_graph(std::istream& in);
KnapsackInstance read_knapsack(std::istream& in);
Sequence read_sequence(std::istream& in);
Instance read_instance(std::istream& in);
Instance read_instance(const std::string& path);

}  // namespace para
