#include "fodlab/mutants.hpp"

namespace fodlab {

PolyMap corrupted_delta(const PolyMap& f) {
  const std::size_t m = f.dom();
  const PolyMap at_origin = map_pair(map_zero(2 * m, m), projection({m, m}, 1));
  return map_compose(jacobian_action(f), at_origin);
}

PolyMap corrupted_rho(const PolyMap& f) {
  const std::size_t m = f.dom();
  const std::size_t n = f.cod();
  const std::vector<Poly> base_vars = projection({m, n}, 0).components();
  std::vector<Poly> comps(m, Poly::zero(m + n));
  for (std::size_t j = 0; j < m && j < n; ++j) {
    for (std::size_t i = 0; i < m && i < n; ++i) {
      const Poly d = f[j].partial(i);
      if (d.is_zero()) continue;
      comps[j] += d.substitute(base_vars, m + n) * Poly::variable(m + n, m + i);
    }
  }
  return PolyMap(m + n, std::move(comps));
}

}  // namespace fodlab
