#include "treecode/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace treecode {

PatternGraph::PatternGraph(int k, int m, std::vector<Subset> edges) : k_(k), m_(m), edges_(std::move(edges)) {
  if (m < 0 || m >= k) throw std::domain_error("PatternGraph: need 0 <= m < k");
  if (edges_.empty()) throw std::domain_error("PatternGraph: no edges");
  for (const auto& e : edges_) {
    if (static_cast<int>(e.size()) != m) throw std::domain_error("PatternGraph: edge is not an m-subset");
    if (!e.empty() && (e.min() < 1 || e.max() > k)) throw std::domain_error("PatternGraph: vertex outside [k]");
  }
  std::sort(edges_.begin(), edges_.end(), ColexLess{});
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::domain_error("PatternGraph: duplicate edge");
}

PatternGraph PatternGraph::complete(int k, int m) {
  if (m < 0 || m >= k) throw std::domain_error("PatternGraph::complete: need 0 <= m < k");
  std::vector<Subset> edges;
  std::vector<Vertex> pick(m);
  // All m-subsets of [k] by odometer over increasing tuples.
  for (int i = 0; i < m; ++i) pick[i] = i + 1;
  while (true) {
    edges.emplace_back(pick);
    int i = m - 1;
    while (i >= 0 && pick[i] == k - (m - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return PatternGraph(k, m, std::move(edges));
}

PatternGraph PatternGraph::cycle(int k) {
  if (k < 3) throw std::domain_error("PatternGraph::cycle: need k >= 3");
  std::vector<Subset> edges;
  for (int i = 1; i < k; ++i) edges.push_back(Subset{i, i + 1});
  edges.push_back(Subset{1, k});
  return PatternGraph(k, 2, std::move(edges));
}

HBuiltTree::HBuiltTree(int n, int k, int m, std::vector<DecoratedEdge> edges, Subset root)
    : n_(n), k_(k), m_(m), edges_(std::move(edges)), root_(std::move(root)) {
  for (auto& e : edges_) std::sort(e.laps.begin(), e.laps.end(), ColexLess{});
  std::sort(edges_.begin(), edges_.end(),
            [](const DecoratedEdge& a, const DecoratedEdge& b) { return colex_less(a.vertices, b.vertices); });
}

Hypergraph HBuiltTree::hypergraph() const {
  std::vector<Subset> vs;
  for (const auto& e : edges_) vs.push_back(e.vertices);
  return Hypergraph(n_, k_, std::move(vs));
}

std::vector<Subset> HBuiltTree::all_laps() const {
  std::vector<Subset> laps;
  for (const auto& e : edges_) laps.insert(laps.end(), e.laps.begin(), e.laps.end());
  std::sort(laps.begin(), laps.end(), ColexLess{});
  laps.erase(std::unique(laps.begin(), laps.end()), laps.end());
  return laps;
}

}  // namespace treecode
