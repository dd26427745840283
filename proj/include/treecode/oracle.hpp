#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "treecode/cycle_free.hpp"
#include "treecode/edge_tree.hpp"
#include "treecode/exact.hpp"
#include "treecode/hypergraph.hpp"
#include "treecode/pattern.hpp"

// Brute-force ground truth. Everything here works from the definitions
// alone and links against core only; nothing calls the encoders, decoders or
// closed-form counts it is used to check.
namespace treecode::oracle {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate);
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

inline constexpr double kDeskBudget = 1e6;

// Every f: A -> B u C for which each b reaches C under b -> f(gamma(b)),
// in lexicographic order of the value sequence (B before C, by index).
std::vector<CycleFreeFunction> enumerate_cycle_free(const CycleFreeSpec& spec);

// All (k,m)-trees with e edges on [e(k-m)+m], built by repeatedly affixing
// an edge along an m-subset of an existing edge. With `rooted_at`, only the
// trees having it inside some edge. Sorted by edge list.
std::vector<Hypergraph> enumerate_km_trees(int k, int m, int e, const std::optional<Subset>& rooted_at = std::nullopt);

// All H-built-trees with e edges rooted at [m]: every decoration of every
// (k,m)-tree by copies of H that puts each shared lap on both sides and [m]
// among the laps. Sorted.
std::vector<HBuiltTree> enumerate_hbuilt(const PatternGraph& h, int e);

// All k-gon trees with e polygons on [e(k-2)+2] as simple graphs, grown from
// a single k-cycle by gluing a new k-cycle along an existing edge. Sorted.
std::vector<Hypergraph> enumerate_kgon_trees(int k, int e);

// One representative per edge-labelled tree with n edges: vertex-labelled
// trees on [n+1] with every labelling of their edges, vertex labels then
// forgotten. Sorted by form.
std::vector<EdgeLabelledTree> enumerate_edge_labelled_trees(int n);

// Edge-labelled trees with n edges up to permuting labels inside the classes
// of the degree-2 relation.
ExactCount orbit_count_Sn(int n);

}  // namespace treecode::oracle
