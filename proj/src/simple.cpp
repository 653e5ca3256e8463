#include "fodlab/simple.hpp"

#include <string>

#include "fodlab/errors.hpp"

namespace fodlab {

namespace {

std::string describe(const SimpleObj& x) {
  return "(" + std::to_string(x.fiber) + " over " + std::to_string(x.base) + ")";
}

PolyMap fiber_projection(const SimpleObj& x) { return projection({x.base, x.fiber}, 1); }
PolyMap base_projection(const SimpleObj& x) { return projection({x.base, x.fiber}, 0); }

}  // namespace

SimpleMor::SimpleMor(SimpleObj src, SimpleObj dst, PolyMap base, PolyMap fib)
    : src_(src), dst_(dst), base_(std::move(base)), fib_(std::move(fib)) {
  if (base_.dom() != src_.base || base_.cod() != dst_.base) {
    throw DimensionError("base map does not go from " + std::to_string(src_.base) + " to " +
                         std::to_string(dst_.base));
  }
  if (fib_.dom() != src_.total() || fib_.cod() != dst_.fiber) {
    throw DimensionError("fiber map of " + describe(src_) + " -> " + describe(dst_) +
                         " must be " + std::to_string(src_.total()) + " -> " +
                         std::to_string(dst_.fiber));
  }
}

const char* to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::cartesian: return "cartesian";
    case MorphismKind::vertical: return "vertical";
    case MorphismKind::neither: return "neither";
    case MorphismKind::both: return "both";
  }
  return "?";
}

SimpleMor simple_identity(const SimpleObj& x) {
  return SimpleMor(x, x, identity(x.base), fiber_projection(x));
}

SimpleMor simple_compose(const SimpleMor& g, const SimpleMor& f) {
  if (!(f.dst() == g.src())) {
    throw DimensionError("composing simple morphisms with mismatched objects " + describe(f.dst()) +
                         " and " + describe(g.src()));
  }
  const PolyMap carried = map_pair(map_compose(f.base(), base_projection(f.src())), f.fib());
  return SimpleMor(f.src(), g.dst(), map_compose(g.base(), f.base()), map_compose(g.fib(), carried));
}

SimpleMor simple_add(const SimpleMor& f, const SimpleMor& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) {
    throw DimensionError("adding simple morphisms between different objects");
  }
  return SimpleMor(f.src(), f.dst(), map_add(f.base(), g.base()), map_add(f.fib(), g.fib()));
}

SimpleMor simple_zero(const SimpleObj& x, const SimpleObj& y) {
  return SimpleMor(x, y, map_zero(x.base, y.base), map_zero(x.total(), y.fiber));
}

bool is_cartesian(const SimpleMor& m) {
  return m.src().fiber == m.dst().fiber && m.fib() == fiber_projection(m.src());
}

bool is_vertical(const SimpleMor& m) {
  return m.src().base == m.dst().base && m.base() == identity(m.src().base);
}

MorphismKind classify(const SimpleMor& m) {
  const bool c = is_cartesian(m);
  const bool v = is_vertical(m);
  if (c && v) return MorphismKind::both;
  if (c) return MorphismKind::cartesian;
  if (v) return MorphismKind::vertical;
  return MorphismKind::neither;
}

Factorization vertical_cartesian_factor(const SimpleMor& m) {
  const SimpleObj middle{m.src().base, m.dst().fiber};
  SimpleMor vertical(m.src(), middle, identity(m.src().base), m.fib());
  SimpleMor cartesian(middle, m.dst(), m.base(), fiber_projection(middle));
  return {std::move(vertical), std::move(cartesian)};
}

Reindexing reindex(const PolyMap& f, const SimpleObj& obj) {
  if (f.cod() != obj.base) {
    throw DimensionError("reindexing " + describe(obj) + " along a map into " +
                         std::to_string(f.cod()));
  }
  const SimpleObj pulled{f.dom(), obj.fiber};
  return {pulled, SimpleMor(pulled, obj, f, fiber_projection(pulled))};
}

std::optional<SimpleMor> factor_through_cartesian(const SimpleMor& cart, const SimpleMor& h,
                                                  const PolyMap& u) {
  if (!is_cartesian(cart)) throw InvariantError("factoring through a non-cartesian morphism");
  if (!(h.dst() == cart.dst()) || u.dom() != h.src().base || u.cod() != cart.src().base) {
    throw DimensionError("factorization problem is ill-typed");
  }
  if (map_compose(cart.base(), u) != h.base()) return std::nullopt;
  // cart o k has fiber cart.fib o <u o pi, k.fib> = k.fib, so k.fib is forced to be h.fib.
  SimpleMor k(h.src(), cart.src(), u, h.fib());
  if (!(simple_compose(cart, k) == h)) return std::nullopt;
  return k;
}

SimpleProduct simple_product(const SimpleObj& x, const SimpleObj& y) {
  const SimpleObj xy{x.base + y.base, x.fiber + y.fiber};
  // Domain of a fiber map out of xy is (A, B, A', B').
  const std::size_t dims[] = {x.base, y.base, x.fiber, y.fiber};
  SimpleMor first(xy, x, projection({x.base, y.base}, 0), projection(dims, 2));
  SimpleMor second(xy, y, projection({x.base, y.base}, 1), projection(dims, 3));
  return {xy, std::move(first), std::move(second)};
}

SimpleMor simple_pair(const SimpleMor& f, const SimpleMor& g) {
  if (!(f.src() == g.src())) throw DimensionError("pairing simple morphisms with different sources");
  const SimpleObj target{f.dst().base + g.dst().base, f.dst().fiber + g.dst().fiber};
  return SimpleMor(f.src(), target, map_pair(f.base(), g.base()), map_pair(f.fib(), g.fib()));
}

SimpleMor simple_product_map(const SimpleMor& f, const SimpleMor& g) {
  const SimpleProduct p = simple_product(f.src(), g.src());
  return simple_pair(simple_compose(f, p.first), simple_compose(g, p.second));
}

SimpleObj fibred_product(const SimpleObj& x, const SimpleObj& y) {
  if (x.base != y.base) {
    throw DimensionError("fibred product over different bases " + std::to_string(x.base) +
                         " and " + std::to_string(y.base));
  }
  return {x.base, x.fiber + y.fiber};
}

bool is_cla_morphism(const SimpleMor& m) {
  return is_additive_in_fiber(m.fib(), m.src().base, m.src().fiber);
}

SimpleMor forward_section_D(const PolyMap& f) {
  return SimpleMor({f.dom(), f.dom()}, {f.cod(), f.cod()}, f, jacobian_action(f));
}

MonoidInFibre standard_fibre_monoid(std::size_t base, std::size_t fiber) {
  const std::size_t dims[] = {base, fiber, fiber};
  return {base, fiber, map_zero(base, fiber),
          map_add(projection(dims, 1), projection(dims, 2))};
}

void validate_monoid(const MonoidInFibre& m) {
  const std::size_t b = m.base;
  const std::size_t f = m.fiber;
  if (m.zero.dom() != b || m.zero.cod() != f || m.plus.dom() != b + 2 * f || m.plus.cod() != f) {
    throw InstanceError("fibre monoid maps have the wrong shape");
  }
  {
    // Unit: plus(b, 0(b), u) = u.
    const std::size_t dims[] = {b, f};
    const PolyMap pb = projection(dims, 0);
    const PolyMap pu = projection(dims, 1);
    const PolyMap lhs = map_compose(m.plus, map_tuple({pb, map_compose(m.zero, pb), pu}, b + f));
    if (lhs != pu) throw InstanceError("fibre monoid unit law fails");
  }
  const std::size_t dims3[] = {b, f, f, f};
  const PolyMap pb = projection(dims3, 0);
  const PolyMap u = projection(dims3, 1);
  const PolyMap w = projection(dims3, 2);
  const PolyMap z = projection(dims3, 3);
  const std::size_t dom = b + 3 * f;
  auto plus = [&](const PolyMap& x, const PolyMap& y) {
    return map_compose(m.plus, map_tuple({pb, x, y}, dom));
  };
  if (plus(u, w) != plus(w, u)) throw InstanceError("fibre monoid commutativity fails");
  if (plus(plus(u, w), z) != plus(u, plus(w, z))) {
    throw InstanceError("fibre monoid associativity fails");
  }
}

PolyMap fibre_doubling(const SimpleMor& m) {
  const SimpleObj& x = m.src();
  const std::size_t dims[] = {x.base, x.fiber, x.fiber};
  const std::size_t dom = x.base + 2 * x.fiber;
  const PolyMap p0 = projection(dims, 0);
  const PolyMap p1 = projection(dims, 1);
  const PolyMap p2 = projection(dims, 2);
  return map_tuple({map_compose(m.base(), p0), map_compose(m.fib(), map_pair(p0, p1)),
                    map_compose(m.fib(), map_pair(p0, p2))},
                   dom);
}

bool splus_check(const SPlusMor& m) {
  const SimpleMor& f = m.mor;
  const MonoidInFibre& ma = m.src_monoid;
  const MonoidInFibre& mb = m.dst_monoid;
  if (ma.base != f.src().base || ma.fiber != f.src().fiber || mb.base != f.dst().base ||
      mb.fiber != f.dst().fiber) {
    throw DimensionError("fibre monoids do not sit over the morphism's objects");
  }
  const PolyMap zero_lhs = map_compose(f.fib(), map_pair(identity(ma.base), ma.zero));
  const PolyMap zero_rhs = map_compose(mb.zero, f.base());
  if (zero_lhs != zero_rhs) return false;

  const std::size_t dims[] = {ma.base, ma.fiber, ma.fiber};
  const PolyMap summed = map_pair(projection(dims, 0), ma.plus);
  const PolyMap plus_lhs = map_compose(f.fib(), summed);
  const PolyMap plus_rhs = map_compose(mb.plus, fibre_doubling(f));
  return plus_lhs == plus_rhs;
}

}  // namespace fodlab
