#include "fodlab/monoid.hpp"

#include "fodlab/errors.hpp"

namespace fodlab {

CommutativeMonoid standard_monoid(std::size_t dim) {
  return {dim, map_zero(0, dim), addition(dim)};
}

void validate_monoid(const CommutativeMonoid& m) {
  const std::size_t n = m.dim;
  if (m.zero.dom() != 0 || m.zero.cod() != n || m.plus.dom() != 2 * n || m.plus.cod() != n) {
    throw InstanceError("monoid maps have the wrong shape for dimension " + std::to_string(n));
  }
  const PolyMap zero_n = map_compose(m.zero, terminal(n));
  if (map_compose(m.plus, map_pair(zero_n, identity(n))) != identity(n)) {
    throw InstanceError("monoid unit law fails");
  }
  const std::size_t dims[] = {n, n, n};
  const PolyMap u = projection(dims, 0);
  const PolyMap w = projection(dims, 1);
  const PolyMap z = projection(dims, 2);
  auto plus = [&](const PolyMap& x, const PolyMap& y) { return map_compose(m.plus, map_pair(x, y)); };
  if (plus(u, w) != plus(w, u)) throw InstanceError("monoid commutativity fails");
  if (plus(plus(u, w), z) != plus(u, plus(w, z))) throw InstanceError("monoid associativity fails");
}

}  // namespace fodlab
