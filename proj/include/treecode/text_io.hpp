#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "treecode/cycle_free.hpp"
#include "treecode/edgetree.hpp"
#include "treecode/hbuilt.hpp"
#include "treecode/hypergraph.hpp"

// Plain-text formats. Lines starting with '#' and blank lines are skipped by
// every reader except the edge-code reader, where a blank line is the code of
// the single-edge tree.
namespace treecode::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Hypergraph: `n k m e`, then e lines of k increasing vertex ids. Written in
// colex order of the edges.
struct HypergraphFile {
  Hypergraph graph;
  int m;
};
HypergraphFile read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& g, int m);

// H-built-tree: a hypergraph block, then `H i : lap | lap | ...` for each
// edge i (1-based, in the block's order), then `root: v1 ... vm`.
HBuiltTree read_hbuilt(std::istream& in);
void write_hbuilt(std::ostream& out, const HBuiltTree& t);

// `g: t1 ... te` with tokens `C` or `i.j`, `x: x1 ... xe`, `R: r1 ... re`.
// l is the pattern's lap count, needed to map `i.j` onto B.
HBuiltCode read_hbuilt_code(std::istream& in, int l);
void write_hbuilt_code(std::ostream& out, const HBuiltCode& code, int l);

// A cycle-free frame with names for its elements. A is ordered as listed.
struct NamedFrame {
  CycleFreeSpec spec;
  std::vector<std::string> a, b, c;

  // a1..aA, b1..bB, c1..cC with b_j -> a_(((j-1) mod |A|) + 1).
  static NamedFrame standard(int a_size, int b_size, int c_size);
  std::string name(const Target& t) const;
  Target parse(const std::string& token) const;  // throws std::invalid_argument
};

// `A=a1,...;B=b1,...;C=c1,...;gamma=b->a,...` followed by `f=v1 ... v|A|`
// (a function) or `delta=v1 ... v|A|` (a code).
struct FoataFile {
  NamedFrame frame;
  std::string kind;  // "f" or "delta"
  std::vector<Target> values;
};
FoataFile read_foata(std::istream& in);
void write_frame(std::ostream& out, const NamedFrame& frame);
void write_foata_values(std::ostream& out, const NamedFrame& frame, const std::string& kind,
                        const std::vector<Target>& values);

// Edge-labelled tree: `n`, then n lines `e<label> u v`. Written with the
// vertices numbered 1, 2, ... in breadth-first order from the end named a,
// edges at each vertex taken by increasing label.
EdgeLabelledTree read_edge_tree(std::istream& in);
void write_edge_tree(std::ostream& out, const EdgeLabelledTree& t);

// One line of space-separated symbols from {a, b, e2, ..., en}.
EdgeCode read_edge_code(std::istream& in);
void write_edge_code(std::ostream& out, const EdgeCode& code);

void write_partition(std::ostream& out, const EdgePartition& p);

}  // namespace treecode::io
