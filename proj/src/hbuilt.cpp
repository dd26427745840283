#include "treecode/hbuilt.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "treecode/foata.hpp"

namespace treecode {

namespace {

struct PatternInfo {
  ExactCount aut;
  std::set<LapList> orbit;
  RootedCopySet rooted;
};

LapList image_of(const LapList& laps, std::span<const Vertex> mapping) {
  LapList out;
  out.reserve(laps.size());
  for (const auto& lap : laps) out.push_back(relabel(lap, mapping));
  std::sort(out.begin(), out.end(), ColexLess{});
  return out;
}

std::unique_ptr<const PatternInfo> compute_info(const PatternGraph& h) {
  auto info = std::make_unique<PatternInfo>();
  std::vector<Vertex> perm(h.k() + 1);
  std::iota(perm.begin(), perm.end(), 0);
  const Subset base = Subset::interval(1, h.m());
  std::set<LapList> rooted;
  do {
    LapList img = image_of(h.edges(), perm);
    if (img == h.edges()) ++info->aut;
    if (std::binary_search(img.begin(), img.end(), base, ColexLess{})) rooted.insert(img);
    info->orbit.insert(std::move(img));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  info->rooted.members.assign(rooted.begin(), rooted.end());
  return info;
}

const PatternInfo& info_for(const PatternGraph& h) {
  static std::mutex mu;
  static std::map<PatternGraph, std::unique_ptr<const PatternInfo>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(h);
  if (it == cache.end()) it = cache.emplace(h, compute_info(h)).first;
  return *it->second;
}

ExactCount rooted_copy_formula(const PatternGraph& h, const ExactCount& aut) {
  ExactRational q(factorial(h.k()) * h.l(), aut * binomial(h.k(), h.m()));
  return require_integral(q, "|R_H|");
}

// Maps lap -> [m] and free -> [m+1, k], both monotone. Indexed by vertex.
std::vector<Vertex> standard_map(int n, const Subset& lap, const Subset& free) {
  std::vector<Vertex> h(n + 1, 0);
  Vertex next = 1;
  for (Vertex v : lap) h[v] = next++;
  for (Vertex v : free) h[v] = next++;
  return h;
}

}  // namespace

std::size_t RootedCopySet::index_of(const LapList& laps) const {
  auto it = std::lower_bound(members.begin(), members.end(), laps);
  if (it == members.end() || *it != laps) return 0;
  return static_cast<std::size_t>(it - members.begin()) + 1;
}

ExactCount aut_size(const PatternGraph& h) { return info_for(h).aut; }

const RootedCopySet& rooted_copies(const PatternGraph& h) {
  const PatternInfo& info = info_for(h);
  if (info.rooted.members.empty()) throw std::domain_error("rooted_copies: no copy of H contains [m] as an edge");
  if (ExactCount(info.rooted.members.size()) != rooted_copy_formula(h, info.aut))
    throw std::logic_error("rooted_copies: count differs from k! l / (|Aut H| C(k,m))");
  return info.rooted;
}

bool is_copy_of(const PatternGraph& h, const LapList& laps) {
  LapList sorted = laps;
  std::sort(sorted.begin(), sorted.end(), ColexLess{});
  return info_for(h).orbit.count(sorted) > 0;
}

void check_hbuilt(const PatternGraph& h, const HBuiltTree& t) {
  const int k = h.k(), m = h.m(), e = t.edge_count();
  if (t.k() != k || t.m() != m) throw std::domain_error("H-built-tree: (k, m) differs from the pattern");
  if (e == 0) throw std::domain_error("H-built-tree: no edges");
  const Hypergraph g = t.hypergraph();
  if (auto check = validate_km_tree(g, m); !check) throw std::domain_error("H-built-tree: " + check.reason);

  for (const auto& edge : t.edges()) {
    for (const auto& lap : edge.laps)
      if (!edge.vertices.includes(lap) || static_cast<int>(lap.size()) != m)
        throw std::domain_error("H-built-tree: decoration lap outside its edge");
    // Pull the decoration back to [k] through the increasing bijection.
    std::vector<Vertex> to_k(t.n() + 1, 0);
    Vertex next = 1;
    for (Vertex v : edge.vertices) to_k[v] = next++;
    if (!is_copy_of(h, image_of(edge.laps, to_k)))
      throw std::domain_error("H-built-tree: decoration is not a copy of H");
  }
  const auto& edges = t.edges();
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j) {
      Subset shared = set_intersection(edges[i].vertices, edges[j].vertices);
      if (static_cast<int>(shared.size()) != m) continue;
      auto has = [&](const DecoratedEdge& d) {
        return std::binary_search(d.laps.begin(), d.laps.end(), shared, ColexLess{});
      };
      if (!has(edges[i]) || !has(edges[j])) throw std::domain_error("H-built-tree: shared lap missing from a decoration");
    }
  const auto laps = t.all_laps();
  if (!std::binary_search(laps.begin(), laps.end(), t.root(), ColexLess{}))
    throw std::domain_error("H-built-tree: root is not a lap");
  if (static_cast<long long>(laps.size()) != static_cast<long long>(e) * (h.l() - 1) + 1)
    throw std::domain_error("H-built-tree: lap count differs from e(l-1)+1");
}

bool is_hbuilt(const PatternGraph& h, const HBuiltTree& t) {
  try {
    check_hbuilt(h, t);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

CycleFreeSpec hbuilt_frame(int e, int l) {
  CycleFreeSpec spec;
  spec.a_size = e;
  spec.c_size = 1;
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < l - 1; ++j) spec.gamma.push_back(i);
  return spec;
}

int hbuilt_vertex_count(int k, int m, int e) { return e * (k - m) + m; }

std::uint64_t x_range(int k, int m, int e, int i) {
  return binomial_u64(static_cast<std::uint64_t>((k - m) * (e - i + 1) - 1), static_cast<std::uint64_t>(k - m - 1));
}

HBuiltCode hbuilt_encode(const PatternGraph& h, const HBuiltTree& t) {
  check_hbuilt(h, t);
  const int k = h.k(), m = h.m(), l = h.l(), e = t.edge_count(), n = t.n();
  const Subset base = Subset::interval(1, m);
  if (t.root() != base) throw std::domain_error("hbuilt_encode: tree must be rooted at [m]");

  auto check = validate_km_tree(t.hypergraph(), m, base);
  if (!check) throw std::logic_error("hbuilt_encode: no ordering starting at the root");
  auto parts = free_part_decomposition(*check.witness);
  std::sort(parts.begin(), parts.end(), [](const FreePart& a, const FreePart& b) { return a.free.min() < b.free.min(); });

  auto decoration_of = [&](const Subset& vertices) -> const LapList& {
    for (const auto& d : t.edges())
      if (d.vertices == vertices) return d.laps;
    throw std::logic_error("hbuilt_encode: edge without decoration");
  };

  // Label the laps each D_i brings: E(H_i') minus g'(D_i), colex order.
  std::map<Subset, Target> owner;
  for (int i = 0; i < e; ++i) {
    int j = 0;
    for (const auto& lap : decoration_of(parts[i].edge)) {
      if (lap == parts[i].lap) continue;
      if (!owner.emplace(lap, lap_label(i + 1, ++j, l)).second)
        throw std::logic_error("hbuilt_encode: lap labelled twice");
    }
  }

  HBuiltCode code;
  for (int i = 0; i < e; ++i) {
    const auto& p = parts[i];
    code.g.values.push_back(p.lap == base ? Target::in_c(0) : owner.at(p.lap));
  }
  if (!is_cycle_free(hbuilt_frame(e, l), code.g)) throw std::logic_error("hbuilt_encode: g is not cycle-free");

  const auto& copies = rooted_copies(h);
  for (int i = 0; i < e; ++i) {
    const auto& p = parts[i];
    const Vertex d = p.free.min();
    Subset ground;
    for (int j = i; j < e; ++j) ground = set_union(ground, parts[j].free);
    code.x.push_back(colex_rank(without(p.free, d), k - m - 1, without(ground, d)));
    auto r = copies.index_of(image_of(decoration_of(p.edge), standard_map(n, p.lap, p.free)));
    if (r == 0) throw std::logic_error("hbuilt_encode: decoration image is not a rooted copy");
    code.r.push_back(r);
  }
  return code;
}

HBuiltTree hbuilt_decode(const PatternGraph& h, int e, const HBuiltCode& code) {
  const int k = h.k(), m = h.m(), l = h.l();
  if (e < 1) throw std::domain_error("hbuilt_decode: need e >= 1");
  if (static_cast<int>(code.g.values.size()) != e || static_cast<int>(code.x.size()) != e ||
      static_cast<int>(code.r.size()) != e)
    throw MalformedCode("hbuilt_decode: code components must have length e");
  const auto& copies = rooted_copies(h);
  for (int i = 1; i <= e; ++i) {
    if (code.x[i - 1] < 1 || code.x[i - 1] > x_range(k, m, e, i)) throw std::out_of_range("hbuilt_decode: x_i outside X_i");
    if (code.r[i - 1] < 1 || code.r[i - 1] > copies.members.size())
      throw std::out_of_range("hbuilt_decode: r_i outside R_H");
  }
  if (!is_cycle_free(hbuilt_frame(e, l), code.g)) throw MalformedCode("hbuilt_decode: g is not cycle-free");

  const int n = hbuilt_vertex_count(k, m, e);
  std::vector<Subset> free(e);
  Subset remaining = Subset::interval(m + 1, n);
  for (int i = 0; i < e; ++i) {
    const Vertex d = remaining.min();
    Subset rest = colex_unrank(code.x[i], k - m - 1, without(remaining, d));
    free[i] = set_union(rest, Subset{d});
    remaining = set_difference(remaining, free[i]);
  }

  // Resolve g'(D_i) along g; cycle-freeness guarantees every chain ends at C.
  std::vector<std::optional<Subset>> lap(e);
  std::vector<LapList> decoration(e), labelled(e);
  int resolved = 0;
  for (bool progress = true; progress && resolved < e;) {
    progress = false;
    for (int i = 0; i < e; ++i) {
      if (lap[i]) continue;
      const Target t = code.g.values[i];
      if (t.is_c()) {
        lap[i] = Subset::interval(1, m);
      } else {
        const int owner = t.index / (l - 1), j = t.index % (l - 1);
        if (!lap[owner]) continue;
        lap[i] = labelled[owner][j];
      }
      if (!set_intersection(*lap[i], free[i]).empty()) throw MalformedCode("hbuilt_decode: lap meets the free part");
      const auto to_k = standard_map(n, *lap[i], free[i]);
      std::vector<Vertex> from_k(k + 1, 0);
      for (Vertex v = 1; v <= n; ++v)
        if (to_k[v]) from_k[to_k[v]] = v;
      decoration[i] = image_of(copies.members[code.r[i] - 1], from_k);
      for (const auto& x : decoration[i])
        if (x != *lap[i]) labelled[i].push_back(x);
      ++resolved;
      progress = true;
    }
  }
  if (resolved < e) throw MalformedCode("hbuilt_decode: unresolvable lap reference");

  std::vector<DecoratedEdge> edges;
  for (int i = 0; i < e; ++i) edges.push_back({set_union(*lap[i], free[i]), decoration[i]});
  return HBuiltTree(n, k, m, std::move(edges), Subset::interval(1, m));
}

HBuiltCountForms count_hbuilt_forms(const PatternGraph& h, int e) {
  if (e < 1) throw std::domain_error("count_hbuilt: need e >= 1");
  const int k = h.k(), m = h.m(), l = h.l();
  const ExactCount aut = aut_size(h);
  const ExactCount f = ExactCount(e) * (l - 1) + 1;
  const ExactCount f_pow = power(f, static_cast<unsigned>(e - 1));

  ExactCount product = f_pow * power(rooted_copy_formula(h, aut), static_cast<unsigned>(e));
  for (int i = 1; i <= e; ++i) product *= binomial(static_cast<long long>(k - m) * (e - i + 1) - 1, k - m - 1);

  ExactRational per_edge(power(factorial(m) * l, static_cast<unsigned>(e)), power(aut, static_cast<unsigned>(e)));
  ExactRational fact = ExactRational(factorial(static_cast<unsigned>(e * (k - m))) * f_pow, factorial(e)) * per_edge;
  return {product, require_integral(fact, "count_hbuilt factorial form")};
}

ExactCount count_hbuilt(const PatternGraph& h, int e) {
  auto forms = count_hbuilt_forms(h, e);
  if (forms.product_form != forms.factorial_form)
    throw std::logic_error("count_hbuilt: closed forms disagree (" + forms.product_form.str() + " vs " +
                           forms.factorial_form.str() + ")");
  return forms.product_form;
}

namespace {

// Above this k the k! automorphism search is too slow to serve as a check.
constexpr int kMaxCrossCheckK = 8;

void check_km(int k, int m, int e) {
  if (m < 0 || m >= k) throw std::domain_error("need 0 <= m < k");
  if (e < 1) throw std::domain_error("need e >= 1");
}

}  // namespace

ExactCount count_km_rooted(int k, int m, int e) {
  check_km(k, m, e);
  const int n = hbuilt_vertex_count(k, m, e);
  const ExactCount l = binomial(k, m);
  const ExactCount f = ExactCount(e) * (l - 1) + 1;
  ExactRational q(factorial(n - m) * power(f, e - 1), factorial(e) * power(factorial(k - m), e));
  ExactCount r = require_integral(q, "count_km_rooted");
  if (k <= kMaxCrossCheckK && r != count_hbuilt(PatternGraph::complete(k, m), e))
    throw std::logic_error("count_km_rooted: differs from the H-built count");
  return r;
}

ExactCount count_km_vertex_labelled(int k, int m, int e) {
  check_km(k, m, e);
  const int n = hbuilt_vertex_count(k, m, e);
  const ExactCount f = ExactCount(e) * (binomial(k, m) - 1) + 1;
  return require_integral(ExactRational(binomial(n, m) * count_km_rooted(k, m, e), f), "count_km_vertex_labelled");
}

ExactCount count_kgon_rooted(int k, int e) {
  if (k < 3) throw std::domain_error("count_kgon_rooted: need k >= 3");
  if (e < 1) throw std::domain_error("count_kgon_rooted: need e >= 1");
  const ExactCount f = ExactCount(e) * (k - 1) + 1;
  ExactCount r = require_integral(
      ExactRational(factorial(static_cast<unsigned>(e * (k - 2))) * power(f, e - 1), factorial(e)), "count_kgon_rooted");
  if (k <= kMaxCrossCheckK && r != count_hbuilt(PatternGraph::cycle(k), e))
    throw std::logic_error("count_kgon_rooted: differs from the H-built count");
  return r;
}

ExactCount count_kgon_vertex_labelled(int k, int e) {
  if (k < 3) throw std::domain_error("count_kgon_vertex_labelled: need k >= 3");
  if (e < 1) throw std::domain_error("count_kgon_vertex_labelled: need e >= 1");
  const ExactCount f = ExactCount(e) * (k - 1) + 1;
  ExactRational q = ExactRational(factorial(static_cast<unsigned>(e * (k - 2) + 2)), 2 * factorial(e)) *
                    rational_power(f, e - 2);
  ExactCount r = require_integral(q, "count_kgon_vertex_labelled");
  // A single k-gon: labelled k-cycles on [k].
  if (e == 1 && r != factorial(k - 1) / 2) throw std::logic_error("count_kgon_vertex_labelled: differs from (k-1)!/2");
  return r;
}

HBuiltCode random_hbuilt_code(const PatternGraph& h, int e, SeededRng& rng) {
  const int k = h.k(), m = h.m();
  const auto& copies = rooted_copies(h);
  HBuiltCode code;
  code.g = random_cycle_free(hbuilt_frame(e, h.l()), rng);
  for (int i = 1; i <= e; ++i) {
    code.x.push_back(rng.below(x_range(k, m, e, i)) + 1);
    code.r.push_back(static_cast<std::size_t>(rng.below(copies.members.size())) + 1);
  }
  return code;
}

HBuiltTree random_hbuilt(const PatternGraph& h, int e, SeededRng& rng) {
  return hbuilt_decode(h, e, random_hbuilt_code(h, e, rng));
}

Relabelling Relabelling::inverse() const {
  Relabelling inv;
  inv.forward.assign(forward.size(), 0);
  for (std::size_t v = 1; v < forward.size(); ++v) inv.forward[forward[v]] = static_cast<Vertex>(v);
  return inv;
}

Relabelling root_normalising_relabelling(const HBuiltTree& t) {
  Relabelling r;
  r.forward.assign(t.n() + 1, 0);
  Vertex next = 1;
  for (Vertex v : t.root()) r.forward[v] = next++;
  for (Vertex v = 1; v <= t.n(); ++v)
    if (!t.root().contains(v)) r.forward[v] = next++;
  return r;
}

HBuiltTree relabel(const HBuiltTree& t, const Relabelling& r) {
  std::vector<DecoratedEdge> edges;
  for (const auto& d : t.edges()) edges.push_back({relabel(d.vertices, r.forward), image_of(d.laps, r.forward)});
  return HBuiltTree(t.n(), t.k(), t.m(), std::move(edges), relabel(t.root(), r.forward));
}

}  // namespace treecode
