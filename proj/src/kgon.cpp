#include <algorithm>
#include <set>
#include <stdexcept>

#include "treecode/hbuilt.hpp"

namespace treecode {

namespace {

using Adjacency = std::vector<std::set<Vertex>>;

struct Polygon {
  std::vector<Vertex> cycle;  // in cyclic order
};

DecoratedEdge decorate(const Polygon& p) {
  LapList laps;
  const std::size_t k = p.cycle.size();
  for (std::size_t i = 0; i < k; ++i) laps.push_back(Subset{p.cycle[i], p.cycle[(i + 1) % k]});
  return {Subset(p.cycle), laps};
}

// If the alive part of the graph is one k-cycle, returns it.
std::optional<Polygon> whole_cycle(const Adjacency& adj, const std::vector<bool>& alive, int k) {
  std::vector<Vertex> vs;
  for (std::size_t v = 1; v < adj.size(); ++v)
    if (alive[v]) vs.push_back(static_cast<Vertex>(v));
  if (static_cast<int>(vs.size()) != k) return std::nullopt;
  for (Vertex v : vs)
    if (adj[v].size() != 2) return std::nullopt;
  Polygon p;
  Vertex prev = 0, cur = vs.front();
  do {
    p.cycle.push_back(cur);
    Vertex next = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
    prev = cur;
    cur = next;
  } while (cur != vs.front() && static_cast<int>(p.cycle.size()) <= k);
  if (static_cast<int>(p.cycle.size()) != k || cur != vs.front()) return std::nullopt;
  return p;
}

// A run of exactly k-2 degree-2 vertices whose two outer neighbours are
// adjacent: the polygon added last in some build order.
std::optional<Polygon> leaf_polygon(const Adjacency& adj, const std::vector<bool>& alive, int k) {
  for (std::size_t s = 1; s < adj.size(); ++s) {
    if (!alive[s] || adj[s].size() != 2) continue;
    // Walk both ways from s through degree-2 vertices.
    std::vector<Vertex> left, right;
    auto walk = [&](Vertex from, Vertex start, std::vector<Vertex>& out) {
      Vertex prev = from, cur = start;
      while (adj[cur].size() == 2 && cur != static_cast<Vertex>(s)) {
        out.push_back(cur);
        Vertex next = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
        prev = cur;
        cur = next;
      }
      return cur;
    };
    const Vertex s_v = static_cast<Vertex>(s);
    Vertex u = walk(s_v, *adj[s].begin(), left);
    Vertex v = walk(s_v, *adj[s].rbegin(), right);
    if (u == s_v || v == s_v) continue;  // a pure cycle, handled elsewhere
    std::vector<Vertex> chain(left.rbegin(), left.rend());
    chain.push_back(s_v);
    chain.insert(chain.end(), right.begin(), right.end());
    if (static_cast<int>(chain.size()) != k - 2 || u == v || !adj[u].count(v)) continue;
    Polygon p;
    p.cycle.push_back(u);
    p.cycle.insert(p.cycle.end(), chain.begin(), chain.end());
    p.cycle.push_back(v);
    return p;
  }
  return std::nullopt;
}

}  // namespace

KgonCheck kgon_to_cbuilt(const Hypergraph& graph, int k, const std::optional<Subset>& root) {
  if (graph.k() != 2) throw std::domain_error("kgon_to_cbuilt: expected a 2-uniform graph");
  if (k < 3) throw std::domain_error("kgon_to_cbuilt: need k >= 3");
  const int n = graph.n();
  const long long edge_total = graph.edge_count();
  if (n < k || (n - 2) % (k - 2) != 0) return {std::nullopt, "vertex count is not e(k-2)+2"};
  const int e = (n - 2) / (k - 2);
  if (edge_total != static_cast<long long>(e) * (k - 1) + 1) return {std::nullopt, "edge count is not e(k-1)+1"};
  if (graph.has_isolated_vertices()) return {std::nullopt, "isolated vertex"};

  Adjacency adj(n + 1);
  for (const auto& edge : graph.edges()) {
    adj[edge.min()].insert(edge.max());
    adj[edge.max()].insert(edge.min());
  }
  std::vector<bool> alive(n + 1, true);
  alive[0] = false;
  std::vector<Polygon> polygons;
  while (true) {
    if (auto p = whole_cycle(adj, alive, k)) {
      polygons.push_back(*p);
      break;
    }
    auto p = leaf_polygon(adj, alive, k);
    if (!p) return {std::nullopt, "no removable k-gon"};
    for (std::size_t i = 1; i + 1 < p->cycle.size(); ++i) {
      const Vertex w = p->cycle[i];
      for (Vertex x : adj[w]) adj[x].erase(w);
      adj[w].clear();
      alive[w] = false;
    }
    polygons.push_back(*p);
  }

  std::vector<DecoratedEdge> edges;
  for (const auto& p : polygons) edges.push_back(decorate(p));
  const Subset r = root ? *root : graph.edges().front();
  HBuiltTree tree(n, k, 2, std::move(edges), r);
  try {
    check_hbuilt(PatternGraph::cycle(k), tree);
  } catch (const std::domain_error& err) {
    return {std::nullopt, err.what()};
  }
  if (cbuilt_to_kgon(tree) != graph) return {std::nullopt, "k-gons do not cover the graph"};
  return {std::move(tree), {}};
}

Hypergraph cbuilt_to_kgon(const HBuiltTree& t) {
  if (t.m() != 2) throw std::domain_error("cbuilt_to_kgon: decorations must be 2-graphs");
  return Hypergraph(t.n(), 2, t.all_laps());
}

}  // namespace treecode
