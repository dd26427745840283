#pragma once

#include <vector>

#include "treecode/hypergraph.hpp"
#include "treecode/subset.hpp"

namespace treecode {

// The m-graph H on [k] that decorates every edge of an H-built-tree.
class PatternGraph {
 public:
  // Throws std::domain_error unless 0 <= m < k, every edge is an m-subset of
  // [k], edges are distinct, and there is at least one.
  PatternGraph(int k, int m, std::vector<Subset> edges);

  static PatternGraph complete(int k, int m);  // K_k^m
  static PatternGraph cycle(int k);            // C_k as a 2-graph

  int k() const { return k_; }
  int m() const { return m_; }
  int l() const { return static_cast<int>(edges_.size()); }
  const std::vector<Subset>& edges() const { return edges_; }

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;
  friend auto operator<=>(const PatternGraph&, const PatternGraph&) = default;

 private:
  int k_;
  int m_;
  std::vector<Subset> edges_;  // colex order
};

struct DecoratedEdge {
  Subset vertices;
  std::vector<Subset> laps;  // E(H_i), colex order

  friend bool operator==(const DecoratedEdge&, const DecoratedEdge&) = default;
  friend auto operator<=>(const DecoratedEdge&, const DecoratedEdge&) = default;
};

// A (k,m)-tree on [n] with an m-graph on every edge, rooted at a lap. Edges
// are held in colex order of their vertex sets, so equal trees compare equal.
class HBuiltTree {
 public:
  HBuiltTree(int n, int k, int m, std::vector<DecoratedEdge> edges, Subset root);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return m_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<DecoratedEdge>& edges() const { return edges_; }
  const Subset& root() const { return root_; }

  Hypergraph hypergraph() const;
  // All laps of all decorations, colex order, without repeats.
  std::vector<Subset> all_laps() const;

  friend bool operator==(const HBuiltTree&, const HBuiltTree&) = default;
  friend auto operator<=>(const HBuiltTree&, const HBuiltTree&) = default;

 private:
  int n_;
  int k_;
  int m_;
  std::vector<DecoratedEdge> edges_;
  Subset root_;
};

}  // namespace treecode
