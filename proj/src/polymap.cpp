#include "fodlab/polymap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fodlab/errors.hpp"

namespace fodlab {

namespace {

std::string arrow(std::size_t m, std::size_t n) {
  return std::to_string(m) + " -> " + std::to_string(n);
}

void require_same_shape(const PolyMap& f, const PolyMap& g, const char* what) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw DimensionError(std::string(what) + ": " + arrow(f.dom(), f.cod()) + " vs " +
                         arrow(g.dom(), g.cod()));
  }
}

}  // namespace

PolyMap::PolyMap(std::size_t dom, std::vector<Poly> components)
    : dom_(dom), components_(std::move(components)) {
  for (const Poly& p : components_) {
    if (p.arity() != dom_) {
      throw ArityError("component of arity " + std::to_string(p.arity()) + " in map with domain " +
                       std::to_string(dom_));
    }
  }
}

int PolyMap::degree() const {
  int d = -1;
  for (const Poly& p : components_) d = std::max(d, p.degree());
  return d;
}

PolyMap identity(std::size_t n) {
  std::vector<Poly> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Poly::variable(n, i));
  return PolyMap(n, std::move(comps));
}

PolyMap projection(std::span<const std::size_t> dims, std::size_t block) {
  if (block >= dims.size()) throw DimensionError("projection block out of range");
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{0});
  const std::size_t offset =
      std::accumulate(dims.begin(), dims.begin() + static_cast<long>(block), std::size_t{0});
  std::vector<Poly> comps;
  comps.reserve(dims[block]);
  for (std::size_t i = 0; i < dims[block]; ++i) comps.push_back(Poly::variable(total, offset + i));
  return PolyMap(total, std::move(comps));
}

PolyMap projection(std::initializer_list<std::size_t> dims, std::size_t block) {
  return projection(std::span<const std::size_t>(dims.begin(), dims.size()), block);
}

PolyMap terminal(std::size_t m) { return PolyMap(m, {}); }

PolyMap map_pair(const PolyMap& f, const PolyMap& g) {
  if (f.dom() != g.dom()) {
    throw DimensionError("pairing maps with domains " + std::to_string(f.dom()) + " and " +
                         std::to_string(g.dom()));
  }
  std::vector<Poly> comps = f.components();
  comps.insert(comps.end(), g.components().begin(), g.components().end());
  return PolyMap(f.dom(), std::move(comps));
}

PolyMap map_tuple(std::span<const PolyMap> maps, std::size_t dom) {
  std::vector<Poly> comps;
  for (const PolyMap& m : maps) {
    if (m.dom() != dom) throw DimensionError("tuple component with mismatched domain");
    comps.insert(comps.end(), m.components().begin(), m.components().end());
  }
  return PolyMap(dom, std::move(comps));
}

PolyMap map_tuple(std::initializer_list<PolyMap> maps, std::size_t dom) {
  return map_tuple(std::span<const PolyMap>(maps.begin(), maps.size()), dom);
}

PolyMap map_product(const PolyMap& f, const PolyMap& g) {
  const std::size_t dims[] = {f.dom(), g.dom()};
  return map_pair(map_compose(f, projection(dims, 0)), map_compose(g, projection(dims, 1)));
}

PolyMap map_compose(const PolyMap& g, const PolyMap& f) {
  if (f.cod() != g.dom()) {
    throw DimensionError("cannot compose " + arrow(g.dom(), g.cod()) + " after " +
                         arrow(f.dom(), f.cod()));
  }
  std::vector<Poly> comps;
  comps.reserve(g.cod());
  for (const Poly& p : g.components()) comps.push_back(p.substitute(f.components(), f.dom()));
  return PolyMap(f.dom(), std::move(comps));
}

PolyMap constant_map(std::size_t dom, const Vector& value) {
  std::vector<Poly> comps;
  comps.reserve(value.size());
  for (const Rational& c : value) comps.push_back(Poly::constant(dom, c));
  return PolyMap(dom, std::move(comps));
}

PolyMap map_add(const PolyMap& f, const PolyMap& g) {
  require_same_shape(f, g, "adding maps");
  std::vector<Poly> comps;
  comps.reserve(f.cod());
  for (std::size_t i = 0; i < f.cod(); ++i) comps.push_back(f[i] + g[i]);
  return PolyMap(f.dom(), std::move(comps));
}

PolyMap map_zero(std::size_t m, std::size_t n) {
  return PolyMap(m, std::vector<Poly>(n, Poly::zero(m)));
}

PolyMap map_negate(const PolyMap& f) { return map_scale(Rational(-1), f); }

PolyMap map_scale(const Rational& c, const PolyMap& f) {
  std::vector<Poly> comps;
  comps.reserve(f.cod());
  for (const Poly& p : f.components()) comps.push_back(c * p);
  return PolyMap(f.dom(), std::move(comps));
}

PolyMap addition(std::size_t n) {
  return map_add(projection({n, n}, 0), projection({n, n}, 1));
}

bool is_additive(const PolyMap& f) {
  const PolyMap lhs = map_compose(f, addition(f.dom()));
  const PolyMap rhs = map_compose(addition(f.cod()), map_product(f, f));
  if (lhs != rhs) return false;
  return map_compose(f, map_zero(0, f.dom())) == map_zero(0, f.cod());
}

bool is_homogeneous_linear(const PolyMap& f) {
  for (const Poly& p : f.components()) {
    for (const Term& t : p.terms()) {
      if (total_degree(t.exponents) != 1) return false;
    }
  }
  return true;
}

bool is_additive_in_fiber(const PolyMap& f, std::size_t base_dim, std::size_t fiber_dim) {
  if (f.dom() != base_dim + fiber_dim) throw DimensionError("fiber split does not match domain");
  // Generic elements (a, h, k) are the projections out of base + fiber + fiber.
  const std::size_t dims[] = {base_dim, fiber_dim, fiber_dim};
  const PolyMap a = projection(dims, 0);
  const PolyMap h = projection(dims, 1);
  const PolyMap k = projection(dims, 2);
  const PolyMap lhs = map_compose(f, map_pair(a, map_add(h, k)));
  const PolyMap rhs =
      map_add(map_compose(f, map_pair(a, h)), map_compose(f, map_pair(a, k)));
  if (lhs != rhs) return false;
  const PolyMap at_zero = map_compose(f, map_pair(identity(base_dim), map_zero(base_dim, fiber_dim)));
  return at_zero == map_zero(base_dim, f.cod());
}

bool is_fiber_linear(const PolyMap& f, std::size_t base_dim, std::size_t fiber_dim) {
  if (f.dom() != base_dim + fiber_dim) throw DimensionError("fiber split does not match domain");
  for (const Poly& p : f.components()) {
    for (const Term& t : p.terms()) {
      std::uint32_t d = 0;
      for (std::size_t j = base_dim; j < base_dim + fiber_dim; ++j) d += t.exponents[j];
      if (d != 1) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> as_permutation(const PolyMap& f) {
  if (f.dom() != f.cod()) return std::nullopt;
  std::vector<std::size_t> perm(f.cod());
  std::vector<bool> seen(f.dom(), false);
  for (std::size_t i = 0; i < f.cod(); ++i) {
    const long v = f[i].as_variable();
    if (v < 0 || seen[static_cast<std::size_t>(v)]) return std::nullopt;
    seen[static_cast<std::size_t>(v)] = true;
    perm[i] = static_cast<std::size_t>(v);
  }
  return perm;
}

PolyMap permutation_map(std::span<const std::size_t> perm) {
  std::vector<Poly> comps;
  comps.reserve(perm.size());
  for (std::size_t v : perm) comps.push_back(Poly::variable(perm.size(), v));
  return PolyMap(perm.size(), std::move(comps));
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

Poly partial(const Poly& p, std::size_t var) { return p.partial(var); }

PolyMap jacobian_action(const PolyMap& f) {
  const std::size_t m = f.dom();
  const std::vector<Poly> base_vars = projection({m, m}, 0).components();
  std::vector<Poly> comps;
  comps.reserve(f.cod());
  for (const Poly& p : f.components()) {
    Poly acc = Poly::zero(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
      const Poly d = p.partial(j);
      if (d.is_zero()) continue;
      acc += d.substitute(base_vars, 2 * m) * Poly::variable(2 * m, m + j);
    }
    comps.push_back(std::move(acc));
  }
  return PolyMap(2 * m, std::move(comps));
}

PolyMap jacobian_transpose_action(const PolyMap& f) {
  const std::size_t m = f.dom();
  const std::size_t n = f.cod();
  const std::vector<Poly> base_vars = projection({m, n}, 0).components();
  std::vector<Poly> comps(m, Poly::zero(m + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Poly d = f[i].partial(j);
      if (d.is_zero()) continue;
      comps[j] += d.substitute(base_vars, m + n) * Poly::variable(m + n, m + i);
    }
  }
  return PolyMap(m + n, std::move(comps));
}

Vector eval_point(const PolyMap& f, std::span<const Rational> point) {
  if (point.size() != f.dom()) {
    throw DimensionError("point of length " + std::to_string(point.size()) + " for map with domain " +
                         std::to_string(f.dom()));
  }
  Vector out;
  out.reserve(f.cod());
  for (const Poly& p : f.components()) out.push_back(p.evaluate(point));
  return out;
}

std::vector<double> eval_point_double(const PolyMap& f, std::span<const double> point) {
  if (point.size() != f.dom()) throw DimensionError("point has wrong length");
  std::vector<double> out;
  out.reserve(f.cod());
  for (const Poly& p : f.components()) {
    out.push_back(p.evaluate<double>(
        point, [](const Rational& c) { return c.get_d(); }, 0.0, 1.0));
  }
  return out;
}

std::pair<Vector, Vector> eval_dual(const PolyMap& f, std::span<const Rational> point,
                                    std::span<const Rational> direction) {
  if (point.size() != f.dom() || direction.size() != f.dom()) {
    throw DimensionError("point/direction length does not match domain " + std::to_string(f.dom()));
  }
  using D = Dual<Rational>;
  std::vector<D> x;
  x.reserve(f.dom());
  for (std::size_t j = 0; j < f.dom(); ++j) x.emplace_back(point[j], direction[j]);
  Vector values, tangents;
  for (const Poly& p : f.components()) {
    const D r = p.evaluate<D>(
        x, [](const Rational& c) { return D(c); }, D(Rational(0)), D(Rational(1)));
    values.push_back(r.value);
    tangents.push_back(r.eps);
  }
  return {std::move(values), std::move(tangents)};
}

std::string to_literal(const PolyMap& f) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < f.cod(); ++i) {
    if (i > 0) out << "; ";
    out << to_string(f[i]);
  }
  out << "] : " << f.dom() << " -> " << f.cod();
  return out.str();
}

}  // namespace fodlab
