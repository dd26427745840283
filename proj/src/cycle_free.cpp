#include "treecode/cycle_free.hpp"

#include <stdexcept>

namespace treecode {

void CycleFreeSpec::validate() const {
  if (a_size < 0 || c_size < 0) throw std::domain_error("CycleFreeSpec: negative size");
  std::vector<bool> hit(a_size, false);
  for (int a : gamma) {
    if (a < 0 || a >= a_size) throw std::domain_error("CycleFreeSpec: gamma value outside A");
    hit[a] = true;
  }
  if (!gamma.empty())
    for (bool h : hit)
      if (!h) throw std::domain_error("CycleFreeSpec: gamma is not surjective");
}

void CycleFreeSpec::check_target(const Target& t) const {
  const int bound = t.is_c() ? c_size : b_size();
  if (t.index < 0 || t.index >= bound) throw std::domain_error("value outside B u C");
}

}  // namespace treecode
