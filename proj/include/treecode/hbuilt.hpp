#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treecode/cycle_free.hpp"
#include "treecode/exact.hpp"
#include "treecode/hypergraph.hpp"
#include "treecode/pattern.hpp"
#include "treecode/rng.hpp"

namespace treecode {

using LapList = std::vector<Subset>;  // edge set of an m-graph, colex order

// Number of permutations of [k] that map E(H) onto itself.
ExactCount aut_size(const PatternGraph& h);

// All distinct images of H on [k] that contain [m] as an edge, in ascending
// lexicographic order of their (colex-sorted) lap lists. Codes refer to a
// member by its 1-based position.
struct RootedCopySet {
  std::vector<LapList> members;
  // 1-based position; 0 when absent.
  std::size_t index_of(const LapList& laps) const;
};

// Throws std::domain_error when no image of H contains [m]. Memoised per H;
// safe to call from several threads.
const RootedCopySet& rooted_copies(const PatternGraph& h);

// True iff `laps` (m-subsets of [k]) is the edge set of some image of H.
bool is_copy_of(const PatternGraph& h, const LapList& laps);

// Throws std::domain_error naming the first violated condition: the
// hypergraph is not a (k,m)-tree, a decoration is not a copy of H on its
// edge, a shared lap is missing from one side, the root is not a lap, or the
// lap total differs from e(l-1)+1.
void check_hbuilt(const PatternGraph& h, const HBuiltTree& t);
bool is_hbuilt(const PatternGraph& h, const HBuiltTree& t);

// Code of an H-built-tree with e edges: a cycle-free g over the frame from
// hbuilt_frame, plus a colex index x_i and a rooted-copy index r_i per edge.
// All indices are 1-based.
struct HBuiltCode {
  CycleFreeFunction g;
  std::vector<std::uint64_t> x;
  std::vector<std::size_t> r;
  friend auto operator<=>(const HBuiltCode&, const HBuiltCode&) = default;
};

// A = [e], B = [e] x [l-1] with (i, j) stored as (i-1)(l-1) + (j-1), C = the
// single root lap, gamma the first-coordinate projection.
CycleFreeSpec hbuilt_frame(int e, int l);
inline Target lap_label(int i, int j, int l) { return Target::in_b((i - 1) * (l - 1) + (j - 1)); }

int hbuilt_vertex_count(int k, int m, int e);
// |X_i| = binomial((k-m)(e-i+1) - 1, k-m-1), i in [1, e].
std::uint64_t x_range(int k, int m, int e, int i);

// Encodes a tree rooted at [m]. Throws std::domain_error when the tree is
// not a valid H-built-tree or its root is not [m].
HBuiltCode hbuilt_encode(const PatternGraph& h, const HBuiltTree& t);

// Throws std::out_of_range for an index outside X_i or R_H, MalformedCode
// for a g that is not cycle-free over the frame.
HBuiltTree hbuilt_decode(const PatternGraph& h, int e, const HBuiltCode& code);

// Both closed forms for the number of H-built-trees on [n] rooted at [m].
struct HBuiltCountForms {
  ExactCount product_form;    // f^(e-1) |R_H|^e prod_i |X_i|
  ExactCount factorial_form;  // (e(k-m))! f^(e-1) / e! (m! l / |Aut H|)^e
};
HBuiltCountForms count_hbuilt_forms(const PatternGraph& h, int e);
// Throws std::logic_error if the two forms disagree.
ExactCount count_hbuilt(const PatternGraph& h, int e);

ExactCount count_km_rooted(int k, int m, int e);
ExactCount count_km_vertex_labelled(int k, int m, int e);
ExactCount count_kgon_rooted(int k, int e);
ExactCount count_kgon_vertex_labelled(int k, int e);

HBuiltCode random_hbuilt_code(const PatternGraph& h, int e, SeededRng& rng);
HBuiltTree random_hbuilt(const PatternGraph& h, int e, SeededRng& rng);

// Permutation of [n] taking the root onto [m] (both in increasing order) and
// the remaining vertices, in increasing order, onto [m+1, n]. forward[v] is
// the new name of v; forward[0] is unused.
struct Relabelling {
  std::vector<Vertex> forward;
  Relabelling inverse() const;
};
Relabelling root_normalising_relabelling(const HBuiltTree& t);
HBuiltTree relabel(const HBuiltTree& t, const Relabelling& r);

// k-gon trees. The graph is a 2-uniform hypergraph. Returns the unique
// C_k-built-tree whose decorations cover exactly the graph's edges, rooted at
// `root` (default: the colex-first edge), or the reason there is none.
struct KgonCheck {
  std::optional<HBuiltTree> tree;
  std::string reason;
  explicit operator bool() const { return tree.has_value(); }
};
KgonCheck kgon_to_cbuilt(const Hypergraph& graph, int k, const std::optional<Subset>& root = std::nullopt);
Hypergraph cbuilt_to_kgon(const HBuiltTree& t);

}  // namespace treecode
