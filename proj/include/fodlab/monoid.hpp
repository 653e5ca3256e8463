#pragma once

#include <cstddef>

#include "fodlab/polymap.hpp"

namespace fodlab {

/// Commutative monoid (zero : 0 -> dim, plus : dim + dim -> dim) on an object of B.
struct CommutativeMonoid {
  std::size_t dim = 0;
  PolyMap zero;
  PolyMap plus;
};

/// Coordinatewise addition with the zero vector.
CommutativeMonoid standard_monoid(std::size_t dim);
/// Throws InstanceError unless unit, commutativity and associativity hold exactly.
void validate_monoid(const CommutativeMonoid& m);

}  // namespace fodlab
