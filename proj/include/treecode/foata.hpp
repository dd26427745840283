#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "treecode/cycle_free.hpp"
#include "treecode/exact.hpp"
#include "treecode/rng.hpp"

namespace treecode {

// A code that does not decode: wrong cut count, clashing or missing chain
// assignments, or a first symbol outside C.
class MalformedCode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// True iff every b in B reaches C under b -> f(gamma(b)). Throws
// std::domain_error when f has the wrong length or a value outside B u C.
bool is_cycle_free(const CycleFreeSpec& spec, const CycleFreeFunction& f);

// Foata's bijection, A taken in increasing order. The leaves
// Z = A \ gamma(f(A)) are processed in increasing order; each contributes the
// chain f(z), f(gamma(f(z))), ... up to the first value whose gamma-image is
// in C or was already emitted, and the chain is written in reverse.
// Throws std::invalid_argument when f is not cycle-free.
FoataCode foata_encode(const CycleFreeSpec& spec, const CycleFreeFunction& f);

// Where decode cuts delta: the leaves in increasing order, and the start of
// each piece. A position starts a piece iff its symbol is in C or its
// gamma-image already occurred. Throws MalformedCode unless the number of
// cuts equals |Z| and the first symbol is in C.
struct FoataPieces {
  std::vector<int> leaves;
  std::vector<std::size_t> starts;
  // [begin, end) of piece i.
  std::size_t begin(std::size_t i) const { return starts[i]; }
  std::size_t end(std::size_t i, std::size_t total) const { return i + 1 < starts.size() ? starts[i + 1] : total; }
};
FoataPieces foata_pieces(const CycleFreeSpec& spec, const FoataCode& code);

// Inverse of foata_encode. Throws MalformedCode (see foata_pieces) and also
// when the chains assign two values to one element of A or miss one.
CycleFreeFunction foata_decode(const CycleFreeSpec& spec, const FoataCode& code);

// |C| (|B| + |C|)^(|A| - 1); 1 for the empty A (the single empty function).
ExactCount count_cycle_free(const CycleFreeSpec& spec);

// Uniform code: first symbol uniform in C, the rest uniform in B u C.
// Throws std::domain_error when C is empty and A is not.
FoataCode random_foata_code(const CycleFreeSpec& spec, SeededRng& rng);

// Exactly uniform over the cycle-free functions of `spec`.
CycleFreeFunction random_cycle_free(const CycleFreeSpec& spec, SeededRng& rng);

}  // namespace treecode
