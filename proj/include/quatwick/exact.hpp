#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quatwick {

/// Arbitrary-precision integer used for every exact coefficient.
using Integer = boost::multiprecision::cpp_int;
/// Exact rational scalar (real-Gaussian variances, constant quaternions).
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an enumeration or sampling request exceeds its configured bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// base^exp for a nonnegative exponent.
inline Integer ipow(long base, unsigned exp) {
  Integer result = 1;
  Integer b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    b *= b;
    exp >>= 1U;
  }
  return result;
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return v.str();
}

}  // namespace quatwick
