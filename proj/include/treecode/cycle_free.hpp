#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace treecode {

// A value of a function A -> B u C. A is always {0, ..., |A|-1} in its
// natural order; B and C are index ranges of their own.
struct Target {
  enum class Side : std::uint8_t { b, c };
  Side side = Side::c;
  int index = 0;

  static constexpr Target in_b(int i) { return {Side::b, i}; }
  static constexpr Target in_c(int i) { return {Side::c, i}; }
  bool is_c() const { return side == Side::c; }

  friend auto operator<=>(const Target&, const Target&) = default;
};

// The frame (A, B, C, gamma) of a cycle-free function. gamma maps each b to
// an element of A; it is extended by gamma(c) = c.
struct CycleFreeSpec {
  int a_size = 0;
  int c_size = 0;
  std::vector<int> gamma;  // gamma[b] in [0, a_size)

  int b_size() const { return static_cast<int>(gamma.size()); }
  int codomain_size() const { return b_size() + c_size; }

  // Throws std::domain_error on a negative size, a gamma value outside A, or
  // a non-surjective gamma. An empty B is accepted: it arises for patterns
  // with a single lap, where every function into C is cycle-free.
  void validate() const;

  // Throws std::domain_error when t is not an element of B u C.
  void check_target(const Target& t) const;

  // Position of t in the fixed order B then C; inverse of target_at.
  int ordinal(const Target& t) const { return t.is_c() ? b_size() + t.index : t.index; }
  Target target_at(int ordinal) const {
    return ordinal < b_size() ? Target::in_b(ordinal) : Target::in_c(ordinal - b_size());
  }

  friend bool operator==(const CycleFreeSpec&, const CycleFreeSpec&) = default;
};

// f: A -> B u C, values[a] = f(a).
struct CycleFreeFunction {
  std::vector<Target> values;
  friend auto operator<=>(const CycleFreeFunction&, const CycleFreeFunction&) = default;
};

// Foata's code: the sequence delta, read as g(a) for a = 0, 1, ... in order.
struct FoataCode {
  std::vector<Target> delta;
  friend auto operator<=>(const FoataCode&, const FoataCode&) = default;
};

}  // namespace treecode
