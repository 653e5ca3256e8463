#include "fodlab/lens.hpp"

#include <string>

#include "fodlab/errors.hpp"

namespace fodlab {

LensMor::LensMor(SimpleObj src, SimpleObj dst, PolyMap base, PolyMap fib)
    : src_(src), dst_(dst), base_(std::move(base)), fib_(std::move(fib)) {
  if (base_.dom() != src_.base || base_.cod() != dst_.base) {
    throw DimensionError("lens forward map does not go from " + std::to_string(src_.base) +
                         " to " + std::to_string(dst_.base));
  }
  if (fib_.dom() != src_.base + dst_.fiber || fib_.cod() != src_.fiber) {
    throw DimensionError("lens backward map must be " + std::to_string(src_.base + dst_.fiber) +
                         " -> " + std::to_string(src_.fiber));
  }
}

LensMor lens_identity(const SimpleObj& x) {
  return LensMor(x, x, identity(x.base), projection({x.base, x.fiber}, 1));
}

LensMor lens_compose(const LensMor& g, const LensMor& f) {
  if (!(f.dst() == g.src())) throw DimensionError("composing lenses with mismatched objects");
  const SimpleObj& a = f.src();
  const SimpleObj& c = g.dst();
  const std::size_t dims[] = {a.base, c.fiber};
  const PolyMap pa = projection(dims, 0);
  const PolyMap pc = projection(dims, 1);
  const PolyMap pulled = map_compose(g.fib(), map_pair(map_compose(f.base(), pa), pc));
  return LensMor(a, c, map_compose(g.base(), f.base()), map_compose(f.fib(), map_pair(pa, pulled)));
}

LensMor lens_add(const LensMor& f, const LensMor& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) {
    throw DimensionError("adding lenses between different objects");
  }
  return LensMor(f.src(), f.dst(), map_add(f.base(), g.base()), map_add(f.fib(), g.fib()));
}

LensMor lens_zero(const SimpleObj& x, const SimpleObj& y) {
  return LensMor(x, y, map_zero(x.base, y.base), map_zero(x.base + y.fiber, x.fiber));
}

LensProduct lens_product(const SimpleObj& x, const SimpleObj& y) {
  const SimpleObj xy{x.base + y.base, x.fiber + y.fiber};
  // Backward maps of the projections have domain (A, B, A') or (A, B, B').
  const std::size_t first_dims[] = {x.base, y.base, x.fiber};
  const std::size_t second_dims[] = {x.base, y.base, y.fiber};
  const std::size_t first_dom = xy.base + x.fiber;
  const std::size_t second_dom = xy.base + y.fiber;
  LensMor first(xy, x, projection({x.base, y.base}, 0),
                map_pair(projection(first_dims, 2), map_zero(first_dom, y.fiber)));
  LensMor second(xy, y, projection({x.base, y.base}, 1),
                 map_pair(map_zero(second_dom, x.fiber), projection(second_dims, 2)));
  return {xy, std::move(first), std::move(second)};
}

LensMor lens_pair(const LensMor& f, const LensMor& g) {
  if (!(f.src() == g.src())) throw DimensionError("pairing lenses with different sources");
  const SimpleObj& x = f.src();
  const SimpleObj target{f.dst().base + g.dst().base, f.dst().fiber + g.dst().fiber};
  const std::size_t dims[] = {x.base, f.dst().fiber, g.dst().fiber};
  const PolyMap px = projection(dims, 0);
  const PolyMap fib = map_add(map_compose(f.fib(), map_pair(px, projection(dims, 1))),
                              map_compose(g.fib(), map_pair(px, projection(dims, 2))));
  return LensMor(x, target, map_pair(f.base(), g.base()), fib);
}

LensMor dual_of_simple(const Span& s) {
  if (!is_cartesian(s.cartesian)) throw InvariantError("right leg of span is not cartesian");
  if (!is_vertical(s.vertical)) throw InvariantError("left leg of span is not vertical");
  if (!(s.cartesian.src() == s.vertical.src())) throw InvariantError("span legs have different apexes");
  return LensMor(s.vertical.dst(), s.cartesian.dst(), s.cartesian.base(), s.vertical.fib());
}

Span span_of_lens(const LensMor& l) {
  const Reindexing r = reindex(l.base(), l.dst());
  SimpleMor vertical(r.object, l.src(), identity(l.src().base), l.fib());
  return {r.lift, std::move(vertical)};
}

Span span_compose(const Span& g, const Span& f) {
  if (!(f.cartesian.dst() == g.vertical.dst())) {
    throw DimensionError("composing spans with mismatched middle objects");
  }
  // Pull g's apex back along f's base map, then factor through f's cartesian leg.
  const Reindexing pulled = reindex(f.cartesian.base(), g.vertical.src());
  const SimpleMor around = simple_compose(g.vertical, pulled.lift);
  const std::optional<SimpleMor> k =
      factor_through_cartesian(f.cartesian, around, identity(f.cartesian.src().base));
  if (!k) throw InvariantError("pullback factorization failed");
  return {simple_compose(g.cartesian, pulled.lift), simple_compose(f.vertical, *k)};
}

LensMor reverse_section_R(const PolyMap& f) {
  return LensMor({f.dom(), f.dom()}, {f.cod(), f.cod()}, f, jacobian_transpose_action(f));
}

bool is_cla_lens(const LensMor& l) {
  return is_additive_in_fiber(l.fib(), l.src().base, l.dst().fiber);
}

}  // namespace fodlab
