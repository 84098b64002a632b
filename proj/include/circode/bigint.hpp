#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace circode {

// Counts and bounds grow as m^{r} with r itself exponential in ell, so
// everything countable is kept in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(BigInt base, int exponent) {
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace circode
