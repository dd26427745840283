#pragma once

#include <string>
#include <vector>

#include "treecode/cycle_free.hpp"
#include "treecode/edge_tree.hpp"
#include "treecode/exact.hpp"
#include "treecode/rng.hpp"

namespace treecode {

// Symbols of an edge code: the two ends a, b of e_1, and the labels e_2..e_n.
// A symbol is stored as 0 for a, 1 for b, and i for e_i.
constexpr int kEndA = 0;
constexpr int kEndB = 1;

std::string symbol_name(int symbol);
// Throws std::invalid_argument on anything but a, b, e2, e3, ...
int parse_symbol(const std::string& token);

// A code of length n-1 whose first symbol is a. The single-edge tree has the
// empty code.
struct EdgeCode {
  std::vector<int> delta;
  int edge_count() const { return static_cast<int>(delta.size()) + 1; }
  friend auto operator<=>(const EdgeCode&, const EdgeCode&) = default;
};

// The cycle-free frame behind the code: A = B = {e_2, ..., e_n} (index i-2),
// gamma the identity, C = {a, b}.
CycleFreeSpec edge_frame(int n);

// The end of e_1 that the path from the lowest-labelled leaf edge among
// e_2..e_n reaches; this end is named a. For n = 1 the first stored endpoint.
Vertex a_endpoint(const EdgeLabelledTree& t);

// f(e) = the shared end when e touches e_1, otherwise the next edge on the
// path from e to e_1, then Foata's code with the ends named by a_endpoint.
EdgeCode edge_encode(const EdgeLabelledTree& t);

// Throws MalformedCode for a code not starting with a, or a symbol outside
// the alphabet. Every other sequence of the right shape decodes. In the
// result vertex 0 is a, vertex 1 is b, and vertex i is the far end of e_i.
EdgeLabelledTree edge_decode(const EdgeCode& code);

// (n+1)^(n-2) for n >= 2, and 1 for the single edge.
ExactCount count_edge_labelled(int n);

EdgeCode random_edge_code(int n, SeededRng& rng);

// Smallest equivalence on edges relating two edges that meet at a vertex of
// degree 2.
EdgePartition cong_from_tree(const EdgeLabelledTree& t);

// The same relation read off the code: a maximal run of symbols that occur
// once in delta, inside one piece, joins the symbol that follows it in that
// piece (with the piece's leaf appended); then a and b merge into e_1.
EdgePartition cong_from_code(const EdgeCode& code);

bool is_series_reduced(const EdgeLabelledTree& t);

// Stirling numbers of the second kind; 0 outside 0 <= k <= n.
ExactCount stirling2(int n, int k);

// The bracketed term of Cameron's sum, taken literally:
//   1/(k+1) sum_{j=0}^{k-1} (-1)^j C(k+1,j) C(k-1,j) j! (k-j+1)^(k-j-1).
ExactRational cameron_inner_literal(int k);

// Edge-labelled series-reduced trees with k edges. Equal to the literal term
// for k >= 2; the single edge counts 1 where the literal term gives 1/2.
ExactCount series_reduced_count(int k);

// S_n = sum_k S(n,k) * series_reduced_count(k). Throws std::logic_error if
// the sum is not integral.
ExactCount cameron_Sn(int n);

}  // namespace treecode
