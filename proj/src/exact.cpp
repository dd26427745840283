#include "treecode/exact.hpp"

#include <limits>
#include <stdexcept>

namespace treecode {

namespace {
__extension__ using U128 = unsigned __int128;
}  // namespace

ExactCount factorial(unsigned n) {
  ExactCount r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

ExactCount binomial(long long n, long long k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  ExactCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ExactCount power(const ExactCount& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

ExactRational rational_power(const ExactCount& base, long long exponent) {
  if (exponent >= 0) return ExactRational(power(base, static_cast<unsigned>(exponent)));
  if (base == 0) throw std::domain_error("rational_power: zero to a negative power");
  return ExactRational(ExactCount(1), power(base, static_cast<unsigned>(-exponent)));
}

ExactCount require_integral(const ExactRational& q, const std::string& what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw std::logic_error(what + ": expected an integer, got " + q.str());
  return boost::multiprecision::numerator(q);
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  U128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial_u64: value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::string to_string(const ExactCount& v) { return v.str(); }

}  // namespace treecode
