#include "treecode/subset.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <stdexcept>

#include "treecode/exact.hpp"

namespace treecode {

Subset::Subset(std::initializer_list<Vertex> elems) : Subset(std::vector<Vertex>(elems)) {}

Subset::Subset(std::vector<Vertex> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw std::domain_error("Subset: duplicate element");
}

Subset Subset::interval(Vertex lo, Vertex hi) {
  Subset s;
  for (Vertex v = lo; v <= hi; ++v) s.elems_.push_back(v);
  return s;
}

Vertex Subset::min() const {
  if (elems_.empty()) throw std::domain_error("Subset::min on empty set");
  return elems_.front();
}

Vertex Subset::max() const {
  if (elems_.empty()) throw std::domain_error("Subset::max on empty set");
  return elems_.back();
}

bool Subset::contains(Vertex v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

bool Subset::includes(const Subset& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

Subset set_union(const Subset& a, const Subset& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Subset(std::move(out));
}

Subset set_intersection(const Subset& a, const Subset& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Subset(std::move(out));
}

Subset set_difference(const Subset& a, const Subset& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Subset(std::move(out));
}

Subset without(const Subset& a, Vertex v) { return set_difference(a, Subset{v}); }

bool colex_less(const Subset& x, const Subset& y) {
  // Walk both from the top; the first disagreement is the largest element of
  // the symmetric difference.
  auto xi = x.vec().rbegin(), yi = y.vec().rbegin();
  while (xi != x.vec().rend() && yi != y.vec().rend()) {
    if (*xi != *yi) return *yi > *xi;
    ++xi;
    ++yi;
  }
  return xi == x.vec().rend() && yi != y.vec().rend();
}

std::uint64_t colex_rank(const Subset& s, std::size_t t, const Subset& ground) {
  if (s.size() != t) throw std::domain_error("colex_rank: subset has the wrong size");
  std::uint64_t rank = 0;
  std::size_t i = 0;
  for (Vertex v : s) {
    auto it = std::lower_bound(ground.begin(), ground.end(), v);
    if (it == ground.end() || *it != v) throw std::domain_error("colex_rank: element outside ground set");
    auto pos = static_cast<std::uint64_t>(it - ground.begin());
    ++i;
    rank += binomial_u64(pos, i);
  }
  return rank + 1;
}

Subset colex_unrank(std::uint64_t rank, std::size_t t, const Subset& ground) {
  const std::uint64_t total = binomial_u64(ground.size(), t);
  if (rank < 1 || rank > total) throw std::out_of_range("colex_unrank: rank out of range");
  std::uint64_t rest = rank - 1;
  std::vector<Vertex> out(t);
  std::uint64_t pos = ground.size();
  for (std::size_t i = t; i >= 1; --i) {
    // Largest position p with C(p, i) <= rest.
    --pos;
    while (binomial_u64(pos, i) > rest) --pos;
    rest -= binomial_u64(pos, i);
    out[i - 1] = ground.vec()[pos];
  }
  return Subset(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Subset& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.vec()[i];
  return os << '}';
}

}  // namespace treecode

namespace treecode {

Subset relabel(const Subset& s, std::span<const Vertex> mapping) {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= mapping.size()) throw std::domain_error("relabel: vertex outside mapping");
    out.push_back(mapping[v]);
  }
  return Subset(std::move(out));
}

}  // namespace treecode
