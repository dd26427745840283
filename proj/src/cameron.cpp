#include <algorithm>
#include <stdexcept>
#include <vector>

#include "treecode/edgetree.hpp"

namespace treecode {

ExactCount stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // Row by row: S(i, j) = j S(i-1, j) + S(i-1, j-1).
  std::vector<ExactCount> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

ExactRational cameron_inner_literal(int k) {
  if (k < 1) throw std::domain_error("cameron_inner_literal: need k >= 1");
  ExactCount sum = 0;
  for (int j = 0; j <= k - 1; ++j) {
    ExactCount term = binomial(k + 1, j) * binomial(k - 1, j) * factorial(j) *
                      power(ExactCount(k - j + 1), static_cast<unsigned>(k - j - 1));
    sum += j % 2 ? -term : term;
  }
  return ExactRational(sum, ExactCount(k + 1));
}

ExactCount series_reduced_count(int k) {
  // The literal term halves once too often for the lone edge, whose two
  // endpoints are interchangeable.
  if (k == 1) return 1;
  return require_integral(cameron_inner_literal(k), "series_reduced_count");
}

ExactCount cameron_Sn(int n) {
  if (n < 1) throw std::domain_error("cameron_Sn: need n >= 1");
  ExactRational total = 0;
  for (int k = 1; k <= n; ++k) total += ExactRational(stirling2(n, k) * series_reduced_count(k));
  return require_integral(total, "cameron_Sn");
}

}  // namespace treecode
