#pragma once

#include <gmpxx.h>

#include <string>

namespace fodlab {

// mpq_class keeps values canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace fodlab
