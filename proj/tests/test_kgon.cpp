#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "treecode/hbuilt.hpp"
#include "treecode/oracle.hpp"

using namespace treecode;

namespace {

// Edge sets of all k-cycles of a simple graph.
std::vector<LapList> k_cycles(const Hypergraph& g, int k) {
  std::set<std::pair<Vertex, Vertex>> adj;
  for (const auto& e : g.edges()) {
    adj.insert({e.min(), e.max()});
    adj.insert({e.max(), e.min()});
  }
  std::set<LapList> found;
  std::vector<Vertex> path;
  std::function<void()> extend = [&] {
    if (static_cast<int>(path.size()) == k) {
      if (!adj.count({path.back(), path.front()})) return;
      LapList laps;
      for (int i = 0; i < k; ++i) {
        Vertex u = path[i], v = path[(i + 1) % k];
        laps.push_back(Subset{std::min(u, v), std::max(u, v)});
      }
      std::sort(laps.begin(), laps.end(), ColexLess{});
      found.insert(laps);
      return;
    }
    for (Vertex v = path.front() + 1; v <= g.n(); ++v) {
      if (std::find(path.begin(), path.end(), v) != path.end() || !adj.count({path.back(), v})) continue;
      path.push_back(v);
      extend();
      path.pop_back();
    }
  };
  for (Vertex s = 1; s <= g.n(); ++s) {
    path = {s};
    extend();
  }
  return {found.begin(), found.end()};
}

// Number of ways to pick e k-cycles of g that form a C_k-built-tree covering
// exactly the edges of g.
int decompositions(const Hypergraph& g, int k, int e) {
  const auto cycles = k_cycles(g, k);
  const auto h = PatternGraph::cycle(k);
  const std::set<Subset> target(g.edges().begin(), g.edges().end());
  int count = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == e) {
      std::vector<DecoratedEdge> edges;
      std::set<Subset> covered;
      for (auto i : pick) {
        std::set<Vertex> vs;
        for (const auto& lap : cycles[i]) vs.insert(lap.begin(), lap.end());
        edges.push_back({Subset(std::vector<Vertex>(vs.begin(), vs.end())), cycles[i]});
        covered.insert(cycles[i].begin(), cycles[i].end());
      }
      if (covered != target) return;
      if (is_hbuilt(h, HBuiltTree(g.n(), k, 2, edges, g.edges().front()))) ++count;
      return;
    }
    for (std::size_t i = from; i < cycles.size(); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return count;
}

}  // namespace

TEST_CASE("decomposition examples") {
  SUBCASE("triangle") {
    auto check = kgon_to_cbuilt(Hypergraph(3, 2, {{1, 2}, {2, 3}, {1, 3}}), 3);
    REQUIRE(check);
    REQUIRE(check.tree->edge_count() == 1);
    CHECK(check.tree->edges()[0].vertices == Subset{1, 2, 3});
  }
  SUBCASE("K4 minus {3,4}") {
    auto check = kgon_to_cbuilt(Hypergraph(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}), 3);
    REQUIRE(check);
    REQUIRE(check.tree->edge_count() == 2);
    CHECK(check.tree->edges()[0].vertices == Subset{1, 2, 3});
    CHECK(check.tree->edges()[1].vertices == Subset{1, 2, 4});
    std::set<Subset> shared;
    for (const auto& lap : check.tree->edges()[0].laps)
      if (std::count(check.tree->edges()[1].laps.begin(), check.tree->edges()[1].laps.end(), lap)) shared.insert(lap);
    CHECK(shared == std::set<Subset>{{1, 2}});
  }
  SUBCASE("K4 is not a triangle tree") {
    CHECK_FALSE(kgon_to_cbuilt(Hypergraph(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), 3));
  }
  SUBCASE("hexagon with a short chord is not a square tree") {
    Hypergraph g(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 3}});
    CHECK_FALSE(kgon_to_cbuilt(g, 4));
  }
  SUBCASE("hexagon with a long chord is two squares") {
    Hypergraph g(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}});
    auto check = kgon_to_cbuilt(g, 4);
    REQUIRE(check);
    CHECK(check.tree->edge_count() == 2);
    CHECK(cbuilt_to_kgon(*check.tree) == g);
  }
  SUBCASE("two triangles sharing only a vertex") {
    Hypergraph g(5, 2, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(kgon_to_cbuilt(g, 3));
  }
}

TEST_CASE("every small polygon tree decomposes uniquely and flattens back") {
  struct Case {
    int k, e, stride;
  };
  for (Case c : {Case{3, 1, 1}, Case{3, 2, 1}, Case{3, 3, 1}, Case{4, 1, 1}, Case{4, 2, 1}, Case{5, 2, 37},
                 Case{3, 4, 13}}) {
    CAPTURE(c.k);
    CAPTURE(c.e);
    const auto graphs = oracle::enumerate_kgon_trees(c.k, c.e);
    CHECK(graphs.size() == count_kgon_vertex_labelled(c.k, c.e));
    for (std::size_t i = 0; i < graphs.size(); i += c.stride) {
      const auto& g = graphs[i];
      auto check = kgon_to_cbuilt(g, c.k);
      REQUIRE(check);
      CHECK(is_hbuilt(PatternGraph::cycle(c.k), *check.tree));
      CHECK(cbuilt_to_kgon(*check.tree) == g);
      CHECK(decompositions(g, c.k, c.e) == 1);
    }
  }
}

TEST_CASE("rooted polygon trees are the decorated trees rooted at {1,2}") {
  for (int k = 3; k <= 4; ++k)
    for (int e = 1; e <= 3; ++e) {
      if (k == 4 && e == 3) continue;
      std::set<HBuiltTree> via_graphs;
      for (const auto& g : oracle::enumerate_kgon_trees(k, e)) {
        if (!std::binary_search(g.edges().begin(), g.edges().end(), Subset{1, 2}, ColexLess{})) continue;
        auto check = kgon_to_cbuilt(g, k, Subset{1, 2});
        REQUIRE(check);
        via_graphs.insert(*check.tree);
      }
      const auto direct = oracle::enumerate_hbuilt(PatternGraph::cycle(k), e);
      CHECK(via_graphs == std::set<HBuiltTree>(direct.begin(), direct.end()));
      CHECK(via_graphs.size() == count_kgon_rooted(k, e));
    }
}
