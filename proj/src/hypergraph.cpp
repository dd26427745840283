#include "treecode/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace treecode {

Hypergraph::Hypergraph(int n, int k, std::vector<Subset> edges) : n_(n), k_(k), edges_(std::move(edges)) {
  if (n < 0 || k < 0) throw std::domain_error("Hypergraph: negative size");
  for (const auto& e : edges_) {
    if (static_cast<int>(e.size()) != k) throw std::domain_error("Hypergraph: edge of the wrong size");
    if (!e.empty() && (e.min() < 1 || e.max() > n)) throw std::domain_error("Hypergraph: vertex outside [n]");
  }
  std::sort(edges_.begin(), edges_.end(), ColexLess{});
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::domain_error("Hypergraph: duplicate edge");
}

bool Hypergraph::has_isolated_vertices() const {
  std::vector<bool> seen(n_ + 1, false);
  for (const auto& e : edges_)
    for (Vertex v : e) seen[v] = true;
  return std::count(seen.begin() + 1, seen.end(), false) > 0;
}

namespace {

void check_parameters(const Hypergraph& g, int m) {
  if (g.edge_count() == 0) throw std::domain_error("validate_km_tree: empty hypergraph");
  if (m < 0 || m >= g.k()) throw std::domain_error("validate_km_tree: overlap size outside [0, k-1]");
}

std::optional<std::string> structural_failure(const Hypergraph& g, int m, const std::optional<Subset>& root) {
  if (g.has_isolated_vertices()) return "isolated vertex";
  const long long expected = static_cast<long long>(g.edge_count()) * (g.k() - m) + m;
  if (expected != g.n()) return "vertex count " + std::to_string(g.n()) + " != e(k-m)+m = " + std::to_string(expected);
  if (root && static_cast<int>(root->size()) != m) return "root is not an m-subset";
  return std::nullopt;
}

class Peeler {
 public:
  Peeler(const Hypergraph& g, int m, const std::optional<Subset>& root) : g_(g), m_(m), root_(root) {}

  // Peels edges in reverse attachment order; peel_[t] = (edge, host) pairs.
  bool run() {
    const int e = g_.edge_count();
    const std::uint64_t all = e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
    return peel(all);
  }

  std::vector<std::pair<int, int>> peel_order;  // (edge, host edge)

 private:
  bool peel(std::uint64_t alive) {
    if (std::popcount(alive) == 1) {
      int last = std::countr_zero(alive);
      if (root_ && !g_.edges()[last].includes(*root_)) return false;
      peel_order.emplace_back(last, -1);
      return true;
    }
    if (dead_.count(alive)) return false;
    const auto& edges = g_.edges();
    const int e = g_.edge_count();
    for (int i = 0; i < e; ++i) {
      if (!(alive >> i & 1)) continue;
      Subset others;
      for (int j = 0; j < e; ++j)
        if (j != i && (alive >> j & 1)) others = set_union(others, edges[j]);
      Subset residual = set_intersection(edges[i], others);
      if (static_cast<int>(residual.size()) != m_) continue;
      int host = -1;
      for (int j = 0; j < e && host < 0; ++j)
        if (j != i && (alive >> j & 1) && edges[j].includes(residual)) host = j;
      if (host < 0) continue;
      peel_order.emplace_back(i, host);
      if (peel(alive & ~(std::uint64_t{1} << i))) return true;
      peel_order.pop_back();
    }
    dead_.insert(alive);
    return false;
  }

  const Hypergraph& g_;
  int m_;
  const std::optional<Subset>& root_;
  std::unordered_set<std::uint64_t> dead_;
};

}  // namespace

KmTreeCheck validate_km_tree(const Hypergraph& g, int m, const std::optional<Subset>& root) {
  check_parameters(g, m);
  if (auto why = structural_failure(g, m, root)) return {std::nullopt, *why};
  if (g.edge_count() > 64) throw std::domain_error("validate_km_tree: more than 64 edges");

  Peeler peeler(g, m, root);
  if (!peeler.run()) return {std::nullopt, "no (k,m)-tree ordering exists"};

  // The witness ordering is the peel order reversed. Any host found while
  // peeling is still alive at that point, so it precedes the peeled edge.
  std::vector<Subset> ordering;
  for (auto it = peeler.peel_order.rbegin(); it != peeler.peel_order.rend(); ++it)
    ordering.push_back(g.edges()[it->first]);
  auto w = witness_from_ordering(g, m, std::move(ordering), root);
  if (!w) throw std::logic_error("validate_km_tree: peel order does not satisfy the definition");
  return {std::move(w), {}};
}

std::optional<KmTreeWitness> witness_from_ordering(const Hypergraph& g, int m, std::vector<Subset> ordering,
                                                   const std::optional<Subset>& root) {
  check_parameters(g, m);
  if (structural_failure(g, m, root)) return std::nullopt;
  {
    std::vector<Subset> sorted = ordering;
    std::sort(sorted.begin(), sorted.end(), ColexLess{});
    if (sorted != g.edges()) return std::nullopt;
  }
  KmTreeWitness w;
  w.m = m;
  const Subset& first = ordering.front();
  if (root) {
    if (!first.includes(*root)) return std::nullopt;
    w.root = *root;
  } else {
    w.root = Subset(std::vector<Vertex>(first.begin(), first.begin() + m));
  }
  w.attach_to.push_back(-1);
  w.attach_lap.push_back(w.root);
  Subset used = first;
  for (std::size_t i = 1; i < ordering.size(); ++i) {
    const Subset& edge = ordering[i];
    int host = -1;
    for (std::size_t j = 0; j < i && host < 0; ++j) {
      Subset lap = set_intersection(edge, ordering[j]);
      if (static_cast<int>(lap.size()) != m) continue;
      if (set_intersection(set_difference(edge, ordering[j]), used).empty()) host = static_cast<int>(j);
    }
    if (host < 0) return std::nullopt;
    w.attach_to.push_back(host);
    w.attach_lap.push_back(set_intersection(edge, ordering[host]));
    used = set_union(used, edge);
  }
  w.ordering = std::move(ordering);
  return w;
}

std::vector<FreePart> free_part_decomposition(const KmTreeWitness& w) {
  std::vector<FreePart> parts;
  Subset used;
  for (std::size_t i = 0; i < w.ordering.size(); ++i) {
    const Subset& edge = w.ordering[i];
    Subset lap = i == 0 ? w.root : set_intersection(edge, used);
    parts.push_back({edge, lap, set_difference(edge, lap)});
    used = set_union(used, edge);
  }
  return parts;
}

}  // namespace treecode
