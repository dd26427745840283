#pragma once

#include <utility>
#include <vector>

#include "treecode/subset.hpp"

namespace treecode {

// A tree whose n edges carry the labels 1..n and whose vertices are
// anonymous. Vertex ids exist only so the structure can be walked; they are
// renumbered 0..n on construction and never take part in equality.
class EdgeLabelledTree {
 public:
  // Sorted list of the sorted incident-label sets, one per vertex. Two trees
  // are the same labelled-edge structure iff their forms are equal.
  using Form = std::vector<std::vector<int>>;

  // ends[i] are the endpoints of label i+1. Throws std::domain_error unless
  // n >= 1 and the edges form a tree on n+1 vertices.
  explicit EdgeLabelledTree(const std::vector<std::pair<Vertex, Vertex>>& ends);
  static EdgeLabelledTree from_form(const Form& form);

  int edge_count() const { return static_cast<int>(ends_.size()); }
  int vertex_count() const { return edge_count() + 1; }
  std::pair<Vertex, Vertex> endpoints(int label) const { return ends_.at(label - 1); }
  // Labels incident to v, increasing.
  const std::vector<int>& incident(Vertex v) const { return incident_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(incident_.at(v).size()); }
  Vertex other_end(int label, Vertex v) const;

  const Form& form() const { return form_; }

  friend bool operator==(const EdgeLabelledTree& a, const EdgeLabelledTree& b) { return a.form_ == b.form_; }
  friend auto operator<=>(const EdgeLabelledTree& a, const EdgeLabelledTree& b) { return a.form_ <=> b.form_; }

 private:
  std::vector<std::pair<Vertex, Vertex>> ends_;
  std::vector<std::vector<int>> incident_;
  Form form_;
};

// A partition of edge labels. Blocks are sorted, and sorted among themselves.
struct EdgePartition {
  std::vector<std::vector<int>> blocks;

  explicit EdgePartition(std::vector<std::vector<int>> b = {});
  bool is_identity() const;
  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

}  // namespace treecode
