#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treecode/subset.hpp"

namespace treecode {

// A k-uniform set system on the vertex set [n]. Edges are kept in colex order.
class Hypergraph {
 public:
  // Throws std::domain_error if an edge is not a k-subset of [n] or repeats.
  Hypergraph(int n, int k, std::vector<Subset> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Subset>& edges() const { return edges_; }
  bool has_isolated_vertices() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  int k_;
  std::vector<Subset> edges_;
};

// An ordering E_1..E_e realising the (k,m)-tree definition: every E_i with
// i >= 2 meets some earlier E_j in exactly m vertices and brings no other
// previously used vertex with it.
struct KmTreeWitness {
  int m = 0;
  Subset root;                  // m-subset of E_1
  std::vector<Subset> ordering;  // E_1..E_e
  std::vector<int> attach_to;    // index j < i of the edge E_i hangs on; -1 for E_1
  std::vector<Subset> attach_lap;  // E_i meet E_j; the root for E_1
};

struct KmTreeCheck {
  std::optional<KmTreeWitness> witness;
  std::string reason;  // set when there is no witness
  explicit operator bool() const { return witness.has_value(); }
};

// Leaf-peeling recogniser with backtracking over the peel order. When `root`
// is given the witness starts with an edge containing it; otherwise the root
// is the m smallest vertices of E_1.
//   empty hypergraph or m outside [0, k-1] -> std::domain_error
//   not a (k,m)-tree                       -> KmTreeCheck without a witness
KmTreeCheck validate_km_tree(const Hypergraph& g, int m, const std::optional<Subset>& root = std::nullopt);

// Checks a caller-supplied ordering against the definition directly.
std::optional<KmTreeWitness> witness_from_ordering(const Hypergraph& g, int m, std::vector<Subset> ordering,
                                                   const std::optional<Subset>& root = std::nullopt);

struct FreePart {
  Subset edge;
  Subset lap;   // g'(E): the root for E_1, else E meet (E_1 u ... u E_{i-1})
  Subset free;  // E minus lap
};

// One entry per edge, in witness order.
std::vector<FreePart> free_part_decomposition(const KmTreeWitness& w);

}  // namespace treecode
