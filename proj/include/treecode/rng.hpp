#pragma once

#include <cstdint>
#include <random>

namespace treecode {

// Reproducible source for all sampling. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; bounded draws use plain rejection
// on the raw 64-bit output (no std::uniform_int_distribution, whose algorithm
// is implementation-defined). Equal seeds give equal draws on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace treecode
