#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qhforge {

// All coefficient and exponent arithmetic is exact. Denominators show up in
// intersection-dual computations and kernel witnesses, so the rational type
// is arbitrary precision end to end.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline std::string to_string(const Rational& r) {
  return r.str();
}

inline int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace qhforge
