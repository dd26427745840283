#include "treecode/edge_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace treecode {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

EdgeLabelledTree::EdgeLabelledTree(const std::vector<std::pair<Vertex, Vertex>>& ends) {
  if (ends.empty()) throw std::domain_error("EdgeLabelledTree: no edges");
  std::map<Vertex, Vertex> ids;
  auto id_of = [&](Vertex v) {
    auto [it, fresh] = ids.emplace(v, static_cast<Vertex>(ids.size()));
    return it->second;
  };
  for (auto [u, v] : ends) {
    if (u == v) throw std::domain_error("EdgeLabelledTree: loop edge");
    Vertex iu = id_of(u);
    Vertex iv = id_of(v);
    ends_.emplace_back(iu, iv);
  }
  const int n = edge_count();
  if (static_cast<int>(ids.size()) != n + 1) throw std::domain_error("EdgeLabelledTree: not a tree (vertex count)");
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  incident_.assign(n + 1, {});
  for (int label = 1; label <= n; ++label) {
    auto [u, v] = ends_[label - 1];
    int ru = find_root(parent, u), rv = find_root(parent, v);
    if (ru == rv) throw std::domain_error("EdgeLabelledTree: not a tree (cycle)");
    parent[ru] = rv;
    incident_[u].push_back(label);
    incident_[v].push_back(label);
  }
  form_ = incident_;
  std::sort(form_.begin(), form_.end());
}

EdgeLabelledTree EdgeLabelledTree::from_form(const Form& form) {
  std::map<int, std::vector<Vertex>> at;
  for (std::size_t v = 0; v < form.size(); ++v)
    for (int label : form[v]) at[label].push_back(static_cast<Vertex>(v));
  std::vector<std::pair<Vertex, Vertex>> ends;
  int expected = 1;
  for (const auto& [label, vs] : at) {
    if (label != expected++ || vs.size() != 2) throw std::domain_error("EdgeLabelledTree::from_form: malformed form");
    ends.emplace_back(vs[0], vs[1]);
  }
  EdgeLabelledTree t(ends);
  if (t.vertex_count() != static_cast<int>(form.size()))
    throw std::domain_error("EdgeLabelledTree::from_form: malformed form");
  return t;
}

Vertex EdgeLabelledTree::other_end(int label, Vertex v) const {
  auto [a, b] = endpoints(label);
  if (a == v) return b;
  if (b == v) return a;
  throw std::domain_error("EdgeLabelledTree::other_end: vertex not on edge");
}

EdgePartition::EdgePartition(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end());
}

bool EdgePartition::is_identity() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

}  // namespace treecode
