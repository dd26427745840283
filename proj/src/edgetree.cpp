#include "treecode/edgetree.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "treecode/foata.hpp"

namespace treecode {

namespace {

Target to_target(int symbol) { return symbol < 2 ? Target::in_c(symbol) : Target::in_b(symbol - 2); }
int to_symbol(const Target& t) { return t.is_c() ? t.index : t.index + 2; }

void check_code(const EdgeCode& code) {
  const int n = code.edge_count();
  for (int s : code.delta)
    if (s < 0 || s > n) throw MalformedCode("edge code: symbol outside {a, b, e2..en}");
  if (!code.delta.empty() && code.delta.front() != kEndA) throw MalformedCode("edge code: must start with a");
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

// Labels 1..n grouped by the root of `dsu` over the same indices.
EdgePartition blocks_of(Dsu& dsu, int n) {
  std::vector<std::vector<int>> by_root(n + 1);
  for (int label = 1; label <= n; ++label) by_root[dsu.find(label)].push_back(label);
  std::vector<std::vector<int>> blocks;
  for (auto& b : by_root)
    if (!b.empty()) blocks.push_back(std::move(b));
  return EdgePartition(std::move(blocks));
}

}  // namespace

std::string symbol_name(int symbol) {
  if (symbol == kEndA) return "a";
  if (symbol == kEndB) return "b";
  return "e" + std::to_string(symbol);
}

int parse_symbol(const std::string& token) {
  if (token == "a") return kEndA;
  if (token == "b") return kEndB;
  if (token.size() >= 2 && token[0] == 'e' && token.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int label = std::stoi(token.substr(1));
    if (label >= 2) return label;
  }
  throw std::invalid_argument("not an edge-code symbol: '" + token + "'");
}

CycleFreeSpec edge_frame(int n) {
  if (n < 1) throw std::domain_error("edge_frame: need n >= 1");
  CycleFreeSpec spec;
  spec.a_size = n - 1;
  spec.c_size = 2;
  spec.gamma.resize(n - 1);
  std::iota(spec.gamma.begin(), spec.gamma.end(), 0);
  return spec;
}

Vertex a_endpoint(const EdgeLabelledTree& t) {
  const auto [u, v] = t.endpoints(1);
  const int n = t.edge_count();
  if (n == 1) return u;
  // Which end of e_1 each vertex hangs from.
  std::vector<Vertex> side(t.vertex_count(), -1);
  std::deque<Vertex> queue{u, v};
  side[u] = u;
  side[v] = v;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (int label : t.incident(x)) {
      if (label == 1) continue;
      Vertex y = t.other_end(label, x);
      if (side[y] < 0) {
        side[y] = side[x];
        queue.push_back(y);
      }
    }
  }
  for (int label = 2; label <= n; ++label) {
    auto [p, q] = t.endpoints(label);
    if (t.degree(p) == 1 || t.degree(q) == 1) return side[p];
  }
  throw std::logic_error("a_endpoint: tree without a leaf edge");
}

EdgeCode edge_encode(const EdgeLabelledTree& t) {
  const int n = t.edge_count();
  if (n == 1) return {};
  const Vertex a = a_endpoint(t);
  const Vertex b = t.other_end(1, a);

  // toward[x]: the edge leaving x in the direction of e_1.
  std::vector<int> toward(t.vertex_count(), 0);
  std::deque<Vertex> queue{a, b};
  std::vector<bool> seen(t.vertex_count(), false);
  seen[a] = seen[b] = true;
  CycleFreeFunction f;
  f.values.resize(n - 1);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (int label : t.incident(x)) {
      Vertex y = t.other_end(label, x);
      if (label == 1 || seen[y]) continue;
      seen[y] = true;
      toward[y] = label;
      queue.push_back(y);
      const int near = x == a ? kEndA : x == b ? kEndB : toward[x];
      f.values[label - 2] = to_target(near);
    }
  }
  const FoataCode fc = foata_encode(edge_frame(n), f);
  EdgeCode code;
  for (const auto& target : fc.delta) code.delta.push_back(to_symbol(target));
  if (code.delta.front() != kEndA) throw std::logic_error("edge_encode: code does not start with a");
  return code;
}

EdgeLabelledTree edge_decode(const EdgeCode& code) {
  check_code(code);
  const int n = code.edge_count();
  std::vector<std::pair<Vertex, Vertex>> ends{{0, 1}};
  if (n == 1) return EdgeLabelledTree(ends);
  FoataCode fc;
  for (int s : code.delta) fc.delta.push_back(to_target(s));
  const CycleFreeFunction f = foata_decode(edge_frame(n), fc);
  // e_i joins its near end to its own far end, vertex i.
  for (int label = 2; label <= n; ++label) ends.emplace_back(to_symbol(f.values[label - 2]), label);
  return EdgeLabelledTree(ends);
}

ExactCount count_edge_labelled(int n) {
  if (n < 1) throw std::domain_error("count_edge_labelled: need n >= 1");
  if (n == 1) return 1;
  return power(ExactCount(n + 1), static_cast<unsigned>(n - 2));
}

EdgeCode random_edge_code(int n, SeededRng& rng) {
  if (n < 1) throw std::domain_error("random_edge_code: need n >= 1");
  EdgeCode code;
  if (n == 1) return code;
  code.delta.push_back(kEndA);
  for (int i = 1; i < n - 1; ++i) code.delta.push_back(static_cast<int>(rng.below(n + 1)));
  return code;
}

EdgePartition cong_from_tree(const EdgeLabelledTree& t) {
  const int n = t.edge_count();
  Dsu dsu(n + 1);
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) == 2) dsu.unite(t.incident(v)[0], t.incident(v)[1]);
  return blocks_of(dsu, n);
}

EdgePartition cong_from_code(const EdgeCode& code) {
  check_code(code);
  const int n = code.edge_count();
  // Elements: 0 = a, 1 = b, i = e_i.
  Dsu dsu(n + 1);
  if (n >= 2) {
    FoataCode fc;
    for (int s : code.delta) fc.delta.push_back(to_target(s));
    const FoataPieces pieces = foata_pieces(edge_frame(n), fc);
    std::vector<int> occurrences(n + 1, 0);
    for (int s : code.delta) ++occurrences[s];
    const auto& d = code.delta;
    for (std::size_t i = 0; i < pieces.leaves.size(); ++i) {
      // The piece with its leaf appended.
      std::vector<int> piece(d.begin() + pieces.begin(i), d.begin() + pieces.end(i, d.size()));
      piece.push_back(pieces.leaves[i] + 2);
      for (std::size_t pos = 0; pos + 1 < piece.size(); ++pos)
        if (occurrences[piece[pos]] == 1) dsu.unite(piece[pos], piece[pos + 1]);
    }
  }
  // Identify a and b as e_1. Element 0 (a) is not a label; fold it into 1.
  dsu.unite(kEndA, kEndB);
  return blocks_of(dsu, n);
}

bool is_series_reduced(const EdgeLabelledTree& t) { return cong_from_tree(t).is_identity(); }

}  // namespace treecode
