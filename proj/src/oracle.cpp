#include "treecode/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace treecode::oracle {

BudgetExceeded::BudgetExceeded(const std::string& what, double estimate)
    : std::runtime_error(what + ": search space of about " + std::to_string(static_cast<long long>(estimate)) +
                         " exceeds the desk budget"),
      estimate_(estimate) {}

namespace {

using Mask = std::uint32_t;

void guard(const char* what, double estimate, double budget = kDeskBudget) {
  if (estimate > budget) throw BudgetExceeded(what, estimate);
}

// Calls fn with every size-t subset of `items`.
void for_each_choice(const std::vector<int>& items, int t, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == t) {
      fn(pick);
      return;
    }
    for (std::size_t i = from; i + (t - pick.size()) <= items.size(); ++i) {
      pick.push_back(items[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

Mask mask_of(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= Mask{1} << v;
  return m;
}

Subset subset_of(Mask m) { return Subset(bits_of(m)); }

// Every image of H's lap list under a permutation of [k], as sorted masks
// over vertex positions 1..k.
std::set<std::vector<Mask>> pattern_images(const PatternGraph& h) {
  std::set<std::vector<Mask>> images;
  std::vector<int> perm(h.k() + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Mask> img;
    for (const auto& lap : h.edges()) {
      Mask m = 0;
      for (Vertex v : lap) m |= Mask{1} << perm[v];
      img.push_back(m);
    }
    std::sort(img.begin(), img.end());
    images.insert(img);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return images;
}

}  // namespace

std::vector<CycleFreeFunction> enumerate_cycle_free(const CycleFreeSpec& spec) {
  spec.validate();
  const int width = spec.codomain_size();
  guard("enumerate_cycle_free", std::pow(static_cast<double>(width), spec.a_size));
  std::vector<CycleFreeFunction> out;
  if (spec.a_size > 0 && width == 0) return out;

  std::vector<int> digits(spec.a_size, 0);
  while (true) {
    CycleFreeFunction f;
    for (int d : digits) f.values.push_back(d < spec.b_size() ? Target::in_b(d) : Target::in_c(d - spec.b_size()));
    // Follow b -> f(gamma(b)) for at most |A| + 1 steps.
    bool ok = true;
    for (int b = 0; b < spec.b_size() && ok; ++b) {
      Target t = Target::in_b(b);
      int steps = 0;
      while (!t.is_c() && steps <= spec.a_size) {
        t = f.values[spec.gamma[t.index]];
        ++steps;
      }
      ok = t.is_c();
    }
    if (ok) out.push_back(std::move(f));
    int i = spec.a_size - 1;
    while (i >= 0 && digits[i] == width - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

namespace {

std::set<std::vector<Mask>> km_tree_masks(int k, int m, int e) {
  if (m < 0 || m >= k || e < 1) throw std::domain_error("enumerate_km_trees: need 0 <= m < k and e >= 1");
  const int n = e * (k - m) + m;
  if (n > 31) throw BudgetExceeded("enumerate_km_trees", std::pow(2.0, n));
  std::vector<int> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 1);

  std::set<std::vector<Mask>> level;
  for_each_choice(vertices, k, [&](const std::vector<int>& edge) { level.insert({mask_of(edge)}); });
  for (int size = 2; size <= e; ++size) {
    std::set<std::vector<Mask>> next;
    for (const auto& tree : level) {
      Mask used = 0;
      for (Mask edge : tree) used |= edge;
      std::vector<int> unused;
      for (int v : vertices)
        if (!(used >> v & 1)) unused.push_back(v);
      for (Mask edge : tree)
        for_each_choice(bits_of(edge), m, [&](const std::vector<int>& lap) {
          for_each_choice(unused, k - m, [&](const std::vector<int>& fresh) {
            auto grown = tree;
            grown.push_back(mask_of(lap) | mask_of(fresh));
            std::sort(grown.begin(), grown.end());
            next.insert(std::move(grown));
          });
        });
      guard("enumerate_km_trees", static_cast<double>(next.size()));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<Hypergraph> enumerate_km_trees(int k, int m, int e, const std::optional<Subset>& rooted_at) {
  const int n = e * (k - m) + m;
  std::vector<Hypergraph> out;
  for (const auto& tree : km_tree_masks(k, m, e)) {
    std::vector<Subset> edges;
    bool has_root = !rooted_at;
    for (Mask edge : tree) {
      edges.push_back(subset_of(edge));
      if (rooted_at && edges.back().includes(*rooted_at)) has_root = true;
    }
    if (has_root) out.emplace_back(n, k, std::move(edges));
  }
  std::sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) { return a.edges() < b.edges(); });
  return out;
}

std::vector<HBuiltTree> enumerate_hbuilt(const PatternGraph& h, int e) {
  const int k = h.k(), m = h.m();
  const int n = e * (k - m) + m;
  const Subset root = Subset::interval(1, m);
  const Mask root_mask = mask_of(root.vec());
  const auto images = pattern_images(h);

  std::vector<HBuiltTree> out;
  for (const auto& tree : enumerate_km_trees(k, m, e, root)) {
    const auto& edges = tree.edges();
    std::vector<Mask> edge_masks;
    for (const auto& edge : edges) edge_masks.push_back(mask_of(edge.vec()));
    guard("enumerate_hbuilt", std::pow(static_cast<double>(images.size()), e) * static_cast<double>(out.size() + 1),
          5e7);

    // Candidate decorations per edge: H's images carried onto the edge.
    std::vector<std::vector<std::vector<Mask>>> options(e);
    for (int i = 0; i < e; ++i) {
      const auto& vs = edges[i].vec();
      for (const auto& img : images) {
        std::vector<Mask> laps;
        for (Mask lap : img) {
          Mask carried = 0;
          for (int pos : bits_of(lap)) carried |= Mask{1} << vs[pos - 1];
          laps.push_back(carried);
        }
        std::sort(laps.begin(), laps.end());
        options[i].push_back(std::move(laps));
      }
    }

    std::vector<const std::vector<Mask>*> chosen(e, nullptr);
    auto has_lap = [](const std::vector<Mask>& laps, Mask lap) {
      return std::binary_search(laps.begin(), laps.end(), lap);
    };
    std::function<void(int)> assign = [&](int i) {
      if (i == e) {
        bool rooted = false;
        for (const auto* laps : chosen) rooted = rooted || has_lap(*laps, root_mask);
        if (!rooted) return;
        std::vector<DecoratedEdge> decorated;
        for (int j = 0; j < e; ++j) {
          std::vector<Subset> laps;
          for (Mask lap : *chosen[j]) laps.push_back(subset_of(lap));
          decorated.push_back({edges[j], std::move(laps)});
        }
        out.emplace_back(n, k, m, std::move(decorated), root);
        return;
      }
      for (const auto& laps : options[i]) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          Mask shared = edge_masks[i] & edge_masks[j];
          if (std::popcount(shared) == m) ok = has_lap(laps, shared) && has_lap(*chosen[j], shared);
        }
        if (!ok) continue;
        chosen[i] = &laps;
        assign(i + 1);
      }
    };
    assign(0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Hypergraph> enumerate_kgon_trees(int k, int e) {
  if (k < 3 || e < 1) throw std::domain_error("enumerate_kgon_trees: need k >= 3 and e >= 1");
  const int n = e * (k - 2) + 2;
  if (n > 31) throw BudgetExceeded("enumerate_kgon_trees", std::pow(2.0, n));
  std::vector<int> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 1);
  auto pair_mask = [](int u, int v) { return (Mask{1} << u) | (Mask{1} << v); };

  // A graph is its sorted list of 2-vertex masks.
  std::set<std::vector<Mask>> level;
  for_each_choice(vertices, k, [&](const std::vector<int>& vs) {
    std::vector<int> order(vs.begin() + 1, vs.end());
    do {
      if (order.front() > order.back()) continue;  // each cycle once, not per direction
      std::vector<Mask> g;
      int prev = vs.front();
      for (int v : order) {
        g.push_back(pair_mask(prev, v));
        prev = v;
      }
      g.push_back(pair_mask(prev, vs.front()));
      std::sort(g.begin(), g.end());
      level.insert(std::move(g));
    } while (std::next_permutation(order.begin(), order.end()));
  });
  for (int size = 2; size <= e; ++size) {
    std::set<std::vector<Mask>> next;
    for (const auto& g : level) {
      Mask used = 0;
      for (Mask edge : g) used |= edge;
      std::vector<int> unused;
      for (int v : vertices)
        if (!(used >> v & 1)) unused.push_back(v);
      for (Mask edge : g) {
        const auto ends = bits_of(edge);
        for_each_choice(unused, k - 2, [&](const std::vector<int>& fresh) {
          std::vector<int> path = fresh;
          do {
            auto grown = g;
            int prev = ends[0];
            for (int w : path) {
              grown.push_back(pair_mask(prev, w));
              prev = w;
            }
            grown.push_back(pair_mask(prev, ends[1]));
            std::sort(grown.begin(), grown.end());
            next.insert(std::move(grown));
          } while (std::next_permutation(path.begin(), path.end()));
        });
      }
      guard("enumerate_kgon_trees", static_cast<double>(next.size()));
    }
    level = std::move(next);
  }
  std::vector<Hypergraph> out;
  for (const auto& g : level) {
    std::vector<Subset> edges;
    for (Mask edge : g) edges.push_back(subset_of(edge));
    out.emplace_back(n, 2, std::move(edges));
  }
  std::sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) { return a.edges() < b.edges(); });
  return out;
}

std::vector<EdgeLabelledTree> enumerate_edge_labelled_trees(int n) {
  if (n < 1) throw std::domain_error("enumerate_edge_labelled_trees: need n >= 1");
  if (n > 7) throw BudgetExceeded("enumerate_edge_labelled_trees", std::pow(n + 1.0, n - 1) * std::tgamma(n + 1.0));
  guard("enumerate_edge_labelled_trees", std::pow(n + 1.0, n - 1) * std::tgamma(n + 1.0), 5e7);
  const int vertex_count = n + 1;

  // Vertex-labelled trees on [n+1]: n-edge subsets of K_{n+1} without a cycle.
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < vertex_count; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  std::vector<int> pair_ids(pairs.size());
  std::iota(pair_ids.begin(), pair_ids.end(), 0);

  // Form key: per vertex, the mask of incident labels (bit i-1 for label i),
  // sorted and packed one byte per vertex.
  std::unordered_set<std::uint64_t> keys;
  std::vector<int> labels(n);
  for_each_choice(pair_ids, n, [&](const std::vector<int>& chosen) {
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int id : chosen) {
      auto [u, v] = pairs[id];
      int ru = find(u), rv = find(v);
      if (ru == rv) return;
      parent[ru] = rv;
    }
    std::iota(labels.begin(), labels.end(), 0);
    std::array<std::uint8_t, 8> incidence{};
    do {
      incidence.fill(0);
      for (int i = 0; i < n; ++i) {
        auto [u, v] = pairs[chosen[i]];
        incidence[u] |= std::uint8_t(1u << labels[i]);
        incidence[v] |= std::uint8_t(1u << labels[i]);
      }
      std::sort(incidence.begin(), incidence.begin() + vertex_count);
      std::uint64_t key = 0;
      for (int v = 0; v < vertex_count; ++v) key = key << 8 | incidence[v];
      keys.insert(key);
    } while (std::next_permutation(labels.begin(), labels.end()));
  });

  std::vector<EdgeLabelledTree> out;
  for (std::uint64_t key : keys) {
    EdgeLabelledTree::Form form(vertex_count);
    for (int v = vertex_count - 1; v >= 0; --v, key >>= 8) {
      const auto byte = static_cast<std::uint8_t>(key & 0xff);
      for (int bit = 0; bit < n; ++bit)
        if (byte >> bit & 1) form[v].push_back(bit + 1);
    }
    out.push_back(EdgeLabelledTree::from_form(form));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactCount orbit_count_Sn(int n) {
  const auto trees = enumerate_edge_labelled_trees(n);
  std::set<EdgeLabelledTree::Form> representatives;
  for (const auto& t : trees) {
    // Degree-2 classes, straight from the definition.
    std::vector<int> cls(n + 1);
    std::iota(cls.begin(), cls.end(), 0);
    std::function<int(int)> find = [&](int x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
    for (const auto& at_vertex : t.form())
      if (at_vertex.size() == 2) cls[find(at_vertex[0])] = find(at_vertex[1]);
    std::map<int, std::vector<int>> blocks;
    for (int label = 1; label <= n; ++label) blocks[find(label)].push_back(label);

    // Smallest form over all label permutations that fix every class.
    std::vector<std::vector<int>> block_list;
    for (auto& [r, b] : blocks) block_list.push_back(b);
    std::vector<int> sigma(n + 1);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::optional<EdgeLabelledTree::Form> best;
    std::function<void(std::size_t)> permute = [&](std::size_t bi) {
      if (bi == block_list.size()) {
        EdgeLabelledTree::Form img = t.form();
        for (auto& at_vertex : img) {
          for (int& label : at_vertex) label = sigma[label];
          std::sort(at_vertex.begin(), at_vertex.end());
        }
        std::sort(img.begin(), img.end());
        if (!best || img < *best) best = std::move(img);
        return;
      }
      std::vector<int> image = block_list[bi];
      do {
        for (std::size_t i = 0; i < image.size(); ++i) sigma[block_list[bi][i]] = image[i];
        permute(bi + 1);
      } while (std::next_permutation(image.begin(), image.end()));
    };
    permute(0);
    representatives.insert(*best);
  }
  return ExactCount(representatives.size());
}

}  // namespace treecode::oracle
