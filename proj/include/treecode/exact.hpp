#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace treecode {

// Every count in the library is an exact integer. Rationals only appear as
// intermediates of closed forms that divide, and are checked integral before
// they leave.
using ExactCount = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

ExactCount factorial(unsigned n);
ExactCount binomial(long long n, long long k);
ExactCount power(const ExactCount& base, unsigned exponent);

// base^exponent for a possibly negative exponent; base must be non-zero then.
ExactRational rational_power(const ExactCount& base, long long exponent);

// Throws std::logic_error naming `what` when q is not an integer.
ExactCount require_integral(const ExactRational& q, const std::string& what);

// Small binomials used for ranks and index ranges. Throws std::overflow_error
// when the value does not fit.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

std::string to_string(const ExactCount& v);

}  // namespace treecode
