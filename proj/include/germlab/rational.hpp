#pragma once

// Exact rational scalars. Thin veneer over GMP's C++ classes so the rest of
// the library never touches gmp directly.

#include <gmpxx.h>

#include <string>

#include "germlab/errors.hpp"

namespace germlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZeroError();
  Rational r{Integer(num)};
  r /= Rational{Integer(den)};
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "a" for integers, "a/b" otherwise; always canonical (b > 0, gcd(a,b) = 1).
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

}  // namespace germlab
