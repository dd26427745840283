#include "treecode/rng.hpp"

#include <limits>
#include <stdexcept>

namespace treecode {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("SeededRng::below: empty range");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of bound that fits, so every residue is equally likely.
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

}  // namespace treecode
