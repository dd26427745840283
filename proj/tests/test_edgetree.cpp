#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "treecode/edgetree.hpp"
#include "treecode/foata.hpp"
#include "treecode/oracle.hpp"

using namespace treecode;

namespace {

EdgeLabelledTree path(const std::vector<int>& labels_in_order) {
  std::vector<std::pair<Vertex, Vertex>> ends(labels_in_order.size());
  for (std::size_t i = 0; i < labels_in_order.size(); ++i)
    ends[labels_in_order[i] - 1] = {static_cast<Vertex>(i), static_cast<Vertex>(i + 1)};
  return EdgeLabelledTree(ends);
}

EdgeLabelledTree star(int n) {
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (int i = 1; i <= n; ++i) ends.push_back({0, i});
  return EdgeLabelledTree(ends);
}

EdgeCode code(std::initializer_list<const char*> symbols) {
  EdgeCode c;
  for (const char* s : symbols) c.delta.push_back(parse_symbol(s));
  return c;
}

// Closure of "share a vertex of degree 2", pair by pair.
EdgePartition degree_two_classes(const EdgeLabelledTree& t) {
  const int n = t.edge_count();
  std::vector<int> cls(n + 1);
  for (int i = 1; i <= n; ++i) cls[i] = i;
  for (const auto& labels : t.form())
    if (labels.size() == 2) {
      const int from = cls[labels[1]], to = cls[labels[0]];
      for (int i = 1; i <= n; ++i)
        if (cls[i] == from) cls[i] = to;
    }
  std::map<int, std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks[cls[i]].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [_, b] : blocks) out.push_back(b);
  return EdgePartition(out);
}

// The end of e_1 on the path from edge `from`.
Vertex end_reached(const EdgeLabelledTree& t, int from) {
  const auto [a, b] = t.endpoints(1);
  std::map<Vertex, int> dist{{a, 0}, {b, 0}};
  std::map<Vertex, Vertex> origin{{a, a}, {b, b}};
  std::deque<Vertex> queue{a, b};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (int label : t.incident(v)) {
      if (label == 1) continue;
      Vertex w = t.other_end(label, v);
      if (dist.count(w)) continue;
      dist[w] = dist[v] + 1;
      origin[w] = origin[v];
      queue.push_back(w);
    }
  }
  const auto [u, w] = t.endpoints(from);
  return origin[dist[u] < dist[w] ? u : w];
}

std::vector<EdgeCode> canonical_codes(int n) {
  std::vector<EdgeCode> out;
  if (n == 1) return {EdgeCode{}};
  // Symbols 0 (a), 1 (b), 2..n (e_2..e_n); the first stays at a.
  std::vector<int> digit(n - 1, kEndA);
  for (;;) {
    out.push_back(EdgeCode{digit});
    int i = n - 2;
    while (i >= 1 && ++digit[i] > n) digit[i--] = 0;
    if (i < 1) return out;
  }
}

long brute_stirling(int n, int k) {
  // Restricted growth strings with exactly k distinct values.
  long count = 0;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == n) {
      count += used == k;
      return;
    }
    for (int v = 0; v <= used && v < k; ++v) {
      rgs[pos] = v;
      rec(pos + 1, std::max(used, v + 1));
    }
  };
  if (n == 0) return k == 0;
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("symbols") {
  CHECK(symbol_name(kEndA) == "a");
  CHECK(symbol_name(kEndB) == "b");
  CHECK(symbol_name(7) == "e7");
  CHECK(parse_symbol("e12") == 12);
  CHECK_THROWS_AS(parse_symbol("e1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("c"), std::invalid_argument);
}

TEST_CASE("encode examples") {
  CHECK(edge_encode(path({1, 2})) == code({"a"}));
  CHECK(edge_encode(star(3)) == code({"a", "a"}));
  CHECK(edge_encode(path({2, 1, 3})) == code({"a", "b"}));
  CHECK(edge_encode(path({1})) == EdgeCode{});
}

TEST_CASE("decode examples") {
  CHECK(edge_decode(code({"a"})) == path({1, 2}));
  CHECK(edge_decode(code({"a", "b"})) == path({2, 1, 3}));
  CHECK(edge_decode(code({"a", "a"})) == star(3));
  CHECK(edge_decode(EdgeCode{}) == path({1}));
  std::set<EdgeLabelledTree> trees;
  for (const auto& c : canonical_codes(3)) trees.insert(edge_decode(c));
  const auto oracle_trees = oracle::enumerate_edge_labelled_trees(3);
  CHECK(trees.size() == 4);
  CHECK(trees == std::set<EdgeLabelledTree>(oracle_trees.begin(), oracle_trees.end()));
}

TEST_CASE("malformed edge codes") {
  CHECK_THROWS_AS(edge_decode(code({"b", "e2"})), MalformedCode);
  CHECK_THROWS_AS(edge_decode(code({"a", "e4"})), MalformedCode);
  CHECK_THROWS_AS(EdgeLabelledTree({{0, 1}, {2, 3}}), std::domain_error);
  CHECK_THROWS_AS(EdgeLabelledTree({{0, 1}, {1, 0}}), std::domain_error);
}

TEST_CASE("counts") {
  CHECK(count_edge_labelled(1) == 1);
  CHECK(count_edge_labelled(3) == 4);
  CHECK(count_edge_labelled(5) == 216);
  for (int n = 1; n <= 6; ++n) CHECK(count_edge_labelled(n) == oracle::enumerate_edge_labelled_trees(n).size());
}

TEST_CASE("exhaustive round trip for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto trees = oracle::enumerate_edge_labelled_trees(n);
    std::set<EdgeCode> image;
    for (const auto& t : trees) {
      const auto c = edge_encode(t);
      CHECK(edge_decode(c) == t);
      image.insert(c);
      if (n >= 2) {
        CHECK(c.delta.front() == kEndA);
        int leaf = 0;
        for (int label = 2; label <= n && !leaf; ++label) {
          const auto [u, v] = t.endpoints(label);
          if (t.degree(u) == 1 || t.degree(v) == 1) leaf = label;
        }
        REQUIRE(leaf != 0);
        CHECK(end_reached(t, leaf) == a_endpoint(t));
      }
    }
    CHECK(image.size() == trees.size());
    const auto codes = canonical_codes(n);
    CHECK(codes.size() == count_edge_labelled(n));
    for (const auto& c : codes) {
      CHECK(edge_encode(edge_decode(c)) == c);
      CHECK(image.count(c) == 1);
    }
  }
}

TEST_CASE("classes examples") {
  CHECK(cong_from_tree(path({1, 2, 3})) == EdgePartition({{1, 2, 3}}));
  CHECK(cong_from_tree(star(3)).is_identity());
  CHECK(cong_from_tree(path({1, 2})) == EdgePartition({{1, 2}}));
  CHECK(cong_from_code(code({"a"})) == EdgePartition({{1, 2}}));
  CHECK(cong_from_code(code({"a", "a"})).is_identity());
  CHECK(cong_from_code(code({"a", "b"})) == EdgePartition({{1, 2, 3}}));
}

TEST_CASE("classes from the code agree with classes from the tree") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : canonical_codes(n)) {
      const auto t = edge_decode(c);
      const auto expected = degree_two_classes(t);
      CHECK(cong_from_tree(t) == expected);
      CHECK(cong_from_code(c) == expected);
      CHECK(is_series_reduced(t) == expected.is_identity());
    }
}

TEST_CASE("series-reduced examples") {
  CHECK(is_series_reduced(star(3)));
  CHECK_FALSE(is_series_reduced(path({1, 2, 3})));
  // Spider: three legs of two edges each.
  CHECK_FALSE(is_series_reduced(EdgeLabelledTree({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})));
  CHECK(cong_from_tree(EdgeLabelledTree({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})) ==
        EdgePartition({{1, 2}, {3, 4}, {5, 6}}));
}

TEST_CASE("Stirling numbers") {
  CHECK(stirling2(4, 2) == 7);
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == brute_stirling(n, k));
  for (int n = 1; n <= 12; ++n) {
    CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(n, 1) == 1);
  }
}

TEST_CASE("label classes counted up to symmetry") {
  const std::vector<int> start{1, 1, 2, 8, 52};
  for (int n = 1; n <= 5; ++n) CHECK(cameron_Sn(n) == start[n - 1]);
  for (int n = 1; n <= 6; ++n) CHECK(cameron_Sn(n) == oracle::orbit_count_Sn(n));
  // The literal inner term halves the lone edge; the count of series-reduced
  // one-edge trees is 1.
  CHECK(cameron_inner_literal(1) == ExactRational(1, 2));
  CHECK(series_reduced_count(1) == 1);
  for (int k = 2; k <= 12; ++k) CHECK(cameron_inner_literal(k) == ExactRational(series_reduced_count(k)));
  for (int k = 1; k <= 6; ++k) {
    long reduced = 0;
    for (const auto& t : oracle::enumerate_edge_labelled_trees(k)) {
      bool ok = true;
      for (const auto& labels : t.form()) ok = ok && labels.size() != 2;
      reduced += ok;
    }
    CHECK(series_reduced_count(k) == reduced);
  }
}

TEST_CASE("sampling") {
  SeededRng r1(5), r2(5);
  for (int i = 0; i < 20; ++i) {
    const auto c = random_edge_code(8, r1);
    CHECK(c == random_edge_code(8, r2));
    CHECK(c.delta.front() == kEndA);
    CHECK(edge_encode(edge_decode(c)) == c);
  }
}
