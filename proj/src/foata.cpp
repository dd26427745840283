#include "treecode/foata.hpp"

#include <algorithm>
#include <optional>

namespace treecode {

namespace {

void check_function(const CycleFreeSpec& spec, const std::vector<Target>& values, const char* what) {
  if (static_cast<int>(values.size()) != spec.a_size)
    throw std::domain_error(std::string(what) + ": expected |A| values");
  for (const auto& t : values) spec.check_target(t);
}

}  // namespace

bool is_cycle_free(const CycleFreeSpec& spec, const CycleFreeFunction& f) {
  spec.validate();
  check_function(spec, f.values, "is_cycle_free");
  // 0 unknown, 1 on the current walk, 2 known to reach C.
  std::vector<int> state(spec.a_size, 0);
  std::vector<int> walk;
  for (int b = 0; b < spec.b_size(); ++b) {
    int a = spec.gamma[b];
    walk.clear();
    while (state[a] == 0) {
      state[a] = 1;
      walk.push_back(a);
      const Target next = f.values[a];
      if (next.is_c()) break;
      a = spec.gamma[next.index];
    }
    if (state[a] == 1 && !f.values[a].is_c()) return false;
    for (int w : walk) state[w] = 2;
  }
  return true;
}

FoataCode foata_encode(const CycleFreeSpec& spec, const CycleFreeFunction& f) {
  if (!is_cycle_free(spec, f)) throw std::invalid_argument("foata_encode: function is not cycle-free");
  auto gamma_of = [&](const Target& t) -> std::optional<int> {
    if (t.is_c()) return std::nullopt;
    return spec.gamma[t.index];
  };

  std::vector<bool> in_image(spec.a_size, false);
  for (const auto& t : f.values)
    if (auto a = gamma_of(t)) in_image[*a] = true;

  std::vector<bool> emitted(spec.a_size, false);
  FoataCode code;
  std::vector<Target> chain;
  for (int z = 0; z < spec.a_size; ++z) {
    if (in_image[z]) continue;
    chain.clear();
    Target y = f.values[z];
    chain.push_back(y);
    while (true) {
      auto a = gamma_of(y);
      if (!a || emitted[*a]) break;
      y = f.values[*a];
      chain.push_back(y);
    }
    code.delta.insert(code.delta.end(), chain.rbegin(), chain.rend());
    for (const auto& t : chain)
      if (auto a = gamma_of(t)) emitted[*a] = true;
  }
  if (static_cast<int>(code.delta.size()) != spec.a_size)
    throw std::logic_error("foata_encode: code length differs from |A|");
  return code;
}

FoataPieces foata_pieces(const CycleFreeSpec& spec, const FoataCode& code) {
  spec.validate();
  check_function(spec, code.delta, "foata_pieces");
  FoataPieces p;
  if (code.delta.empty()) return p;
  if (!code.delta.front().is_c()) throw MalformedCode("code does not start in C");

  std::vector<bool> in_image(spec.a_size, false);
  for (const auto& t : code.delta)
    if (!t.is_c()) in_image[spec.gamma[t.index]] = true;
  for (int a = 0; a < spec.a_size; ++a)
    if (!in_image[a]) p.leaves.push_back(a);

  std::vector<bool> seen(spec.a_size, false);
  for (std::size_t pos = 0; pos < code.delta.size(); ++pos) {
    const Target& t = code.delta[pos];
    if (t.is_c()) {
      p.starts.push_back(pos);
      continue;
    }
    const int a = spec.gamma[t.index];
    if (seen[a]) p.starts.push_back(pos);
    seen[a] = true;
  }
  if (p.starts.size() != p.leaves.size())
    throw MalformedCode("cut count " + std::to_string(p.starts.size()) + " differs from leaf count " +
                        std::to_string(p.leaves.size()));
  return p;
}

CycleFreeFunction foata_decode(const CycleFreeSpec& spec, const FoataCode& code) {
  const FoataPieces pieces = foata_pieces(spec, code);
  std::vector<std::optional<Target>> f(spec.a_size);
  auto assign = [&](int a, const Target& t) {
    if (f[a] && *f[a] != t) throw MalformedCode("chains assign two values to one element of A");
    f[a] = t;
  };
  const auto& delta = code.delta;
  for (std::size_t i = 0; i < pieces.leaves.size(); ++i) {
    const std::size_t begin = pieces.begin(i), end = pieces.end(i, delta.size());
    // The piece is (y_m, ..., y_0) with y_0 = f(z) and y_{j+1} = f(gamma(y_j)).
    assign(pieces.leaves[i], delta[end - 1]);
    for (std::size_t pos = end - 1; pos > begin; --pos) {
      const Target& y = delta[pos];
      if (y.is_c()) throw MalformedCode("C symbol inside a piece");
      assign(spec.gamma[y.index], delta[pos - 1]);
    }
  }
  CycleFreeFunction out;
  for (const auto& v : f) {
    if (!v) throw MalformedCode("some element of A receives no value");
    out.values.push_back(*v);
  }
  if (!is_cycle_free(spec, out)) throw std::logic_error("foata_decode: decoded function has a cycle");
  return out;
}

ExactCount count_cycle_free(const CycleFreeSpec& spec) {
  spec.validate();
  if (spec.a_size == 0) return 1;
  return ExactCount(spec.c_size) * power(ExactCount(spec.codomain_size()), static_cast<unsigned>(spec.a_size - 1));
}

FoataCode random_foata_code(const CycleFreeSpec& spec, SeededRng& rng) {
  spec.validate();
  FoataCode code;
  if (spec.a_size == 0) return code;
  if (spec.c_size == 0) throw std::domain_error("random_foata_code: C is empty, no cycle-free function exists");
  code.delta.push_back(Target::in_c(static_cast<int>(rng.below(spec.c_size))));
  for (int a = 1; a < spec.a_size; ++a)
    code.delta.push_back(spec.target_at(static_cast<int>(rng.below(spec.codomain_size()))));
  return code;
}

CycleFreeFunction random_cycle_free(const CycleFreeSpec& spec, SeededRng& rng) {
  return foata_decode(spec, random_foata_code(spec, rng));
}

}  // namespace treecode
