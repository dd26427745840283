#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace treecode {

using Vertex = int;

// A finite set of vertices held as a strictly increasing sequence.
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<Vertex> elems);
  // Sorts; throws std::domain_error on duplicates.
  explicit Subset(std::vector<Vertex> elems);

  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static Subset interval(Vertex lo, Vertex hi);

  std::span<const Vertex> elements() const { return elems_; }
  const std::vector<Vertex>& vec() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  Vertex min() const;
  Vertex max() const;
  bool contains(Vertex v) const;
  bool includes(const Subset& other) const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset& a, const Subset& b) { return a.elems_ <=> b.elems_; }

 private:
  std::vector<Vertex> elems_;
};

Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);
Subset set_difference(const Subset& a, const Subset& b);
Subset without(const Subset& a, Vertex v);

// Colex order: X < Y iff max(X symmetric-difference Y) lies in Y.
bool colex_less(const Subset& x, const Subset& y);

struct ColexLess {
  bool operator()(const Subset& x, const Subset& y) const { return colex_less(x, y); }
};

// 1-based position of `s` among all `t`-subsets of `ground` in colex order.
// `ground` is taken in its increasing order. Throws std::domain_error when
// |s| != t or s is not inside ground.
std::uint64_t colex_rank(const Subset& s, std::size_t t, const Subset& ground);

// Inverse of colex_rank. Throws std::out_of_range unless
// 1 <= rank <= binomial(|ground|, t).
Subset colex_unrank(std::uint64_t rank, std::size_t t, const Subset& ground);

std::ostream& operator<<(std::ostream& os, const Subset& s);

}  // namespace treecode

namespace treecode {

// Image of s under v -> mapping[v]. mapping must be injective on s.
Subset relabel(const Subset& s, std::span<const Vertex> mapping);

}  // namespace treecode
