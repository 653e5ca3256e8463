#pragma once

#include <string_view>
#include <vector>

#include "fodlab/gen.hpp"
#include "fodlab/parse.hpp"

namespace fodlab::test {

inline PolyMap M(std::string_view literal) { return parse_map(literal); }

inline Rational Q(long num, long den = 1) { return make_rational(num, den); }

// Seeded sampler for property tests; `salt` separates the streams of different tests.
inline Generator gen_for(std::uint64_t trial, std::uint64_t salt, std::size_t max_dim = 3,
                         std::uint32_t max_degree = 3) {
  GenParams p;
  p.max_dim = max_dim;
  p.max_degree = max_degree;
  p.max_terms = 4;
  p.coeff_bound = 5;
  p.seed = 20241016;
  return Generator(p, trial, salt);
}

inline Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace fodlab::test
