#include "fodlab/rdc2cdc.hpp"

#include "fodlab/errors.hpp"

namespace fodlab {

Lens2Mor::Lens2Mor(Lens2Obj src, Lens2Obj dst, LensMor outer, LensMor inner)
    : src_(src), dst_(dst), outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!(outer_.src() == src_.outer) || !(outer_.dst() == dst_.outer)) {
    throw DimensionError("outer lens does not connect the outer objects");
  }
  const SimpleObj context{src_.outer.base + dst_.inner.base, src_.outer.fiber + dst_.inner.fiber};
  if (!(inner_.src() == context) || !(inner_.dst() == src_.inner)) {
    throw DimensionError("inner lens must go from (A', A) x (D', D) to (B', B)");
  }
  if (!is_cla_lens(outer_)) throw InvariantError("outer lens is not additive in its cotangent");
  if (!is_cla_lens(inner_)) throw InvariantError("inner lens is not additive in its cotangent");
  if (!is_additive_in_fiber(inner_.base(), src_.outer.base, dst_.inner.base)) {
    throw InvariantError("inner lens is not additive in its second component");
  }
}

Lens2Mor lens2_identity(const Lens2Obj& x) {
  return Lens2Mor(x, x, lens_identity(x.outer), lens_product(x.outer, x.inner).second);
}

Lens2Mor lens2_compose(const Lens2Mor& g, const Lens2Mor& f) {
  if (!(f.dst() == g.src())) throw DimensionError("composing lens-of-lens morphisms with mismatched objects");
  // Same shape as lens_compose, one level up: inner = f.inner o <pi_X, g.inner o <f.outer o pi_X, pi_Z>>.
  const LensProduct ctx = lens_product(f.src().outer, g.dst().inner);
  const LensMor pulled =
      lens_compose(g.inner(), lens_pair(lens_compose(f.outer(), ctx.first), ctx.second));
  const LensMor inner = lens_compose(f.inner(), lens_pair(ctx.first, pulled));
  return Lens2Mor(f.src(), g.dst(), lens_compose(g.outer(), f.outer()), inner);
}

Lens2Mor lens2_add(const Lens2Mor& f, const Lens2Mor& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) {
    throw DimensionError("adding lens-of-lens morphisms between different objects");
  }
  return Lens2Mor(f.src(), f.dst(), lens_add(f.outer(), g.outer()), lens_add(f.inner(), g.inner()));
}

Lens2Product lens2_product(const Lens2Obj& x, const Lens2Obj& y) {
  const LensProduct outer = lens_product(x.outer, y.outer);
  const LensProduct inner = lens_product(x.inner, y.inner);
  const Lens2Obj xy{outer.object, inner.object};
  auto projection_of = [&](const LensMor& outer_proj, const Lens2Obj& target, bool first) {
    // Inner part: pi_{Y_in} onto the chosen inner factor, zero onto the other.
    const LensProduct ctx = lens_product(xy.outer, target.inner);
    const SimpleObj other = first ? y.inner : x.inner;
    const LensMor zero = lens_zero(ctx.object, other);
    const LensMor into = first ? lens_pair(ctx.second, zero) : lens_pair(zero, ctx.second);
    return Lens2Mor(xy, target, outer_proj, into);
  };
  Lens2Mor first = projection_of(outer.first, x, true);
  Lens2Mor second = projection_of(outer.second, y, false);
  return {xy, std::move(first), std::move(second)};
}

SimpleObj phi(const Lens2Obj& x) { return {x.outer.base, x.inner.fiber}; }

SimpleMor phi(const Lens2Mor& m) {
  const std::size_t a = m.src().outer.base;
  const std::size_t d = m.dst().inner.base;
  const std::size_t b_fiber = m.src().inner.fiber;
  const std::size_t a_fiber = m.src().outer.fiber;
  const std::size_t d_fiber = m.dst().inner.fiber;
  const std::size_t dims[] = {a, b_fiber};
  const PolyMap insert =
      map_tuple({projection(dims, 0), map_zero(a + b_fiber, d), projection(dims, 1)}, a + b_fiber);
  const PolyMap take = projection({a_fiber, d_fiber}, 1);
  const PolyMap fib = map_compose(take, map_compose(m.inner().fib(), insert));
  return SimpleMor(phi(m.src()), phi(m.dst()), m.outer().base(), fib);
}

Lens2Mor lift_R(const LensMor& l) {
  const SimpleObj& x = l.src();
  const SimpleObj& y = l.dst();
  const Lens2Obj src{{x.base, x.base}, {x.fiber, x.fiber}};
  const Lens2Obj dst{{y.base, y.base}, {y.fiber, y.fiber}};
  return Lens2Mor(src, dst, reverse_section_R(l.base()), reverse_section_R(l.fib()));
}

PolyMap lift_block_iso(std::size_t a, std::size_t c_fiber) {
  return identity(2 * (a + c_fiber));
}

SimpleMor rdc_to_cdc(const PolyMap& f) { return phi(lift_R(reverse_section_R(f))); }

SimpleMor rdc_to_cdc_closed(const PolyMap& f) {
  const std::size_t a = f.dom();
  const std::size_t b = f.cod();
  const PolyMap rho = jacobian_transpose_action(f);
  const PolyMap rho_rho = jacobian_transpose_action(rho);  // (A x B) x A -> A x B
  const PolyMap insert = map_tuple(
      {projection({a, a}, 0), map_zero(2 * a, b), projection({a, a}, 1)}, 2 * a);
  const PolyMap fib = map_compose(projection({a, b}, 1), map_compose(rho_rho, insert));
  return SimpleMor({a, a}, {b, b}, f, fib);
}

}  // namespace fodlab
