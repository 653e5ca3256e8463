#include "fodlab/tangent.hpp"

#include <string>

#include "fodlab/errors.hpp"

namespace fodlab {

PolyMap TrivBundle::projection() const { return fodlab::projection({base, fiber}, 0); }

BundleMor::BundleMor(TrivBundle src, TrivBundle dst, PolyMap total, PolyMap base)
    : src_(src), dst_(dst), total_(std::move(total)), base_(std::move(base)) {
  if (total_.dom() != src_.total() || total_.cod() != dst_.total() || base_.dom() != src_.base ||
      base_.cod() != dst_.base) {
    throw DimensionError("bundle morphism maps have the wrong shape");
  }
  if (map_compose(dst_.projection(), total_) != map_compose(base_, src_.projection())) {
    throw InvariantError("bundle morphism square does not commute");
  }
}

BundleMor bundle_identity(const TrivBundle& b) {
  return BundleMor(b, b, identity(b.total()), identity(b.base));
}

BundleMor bundle_compose(const BundleMor& g, const BundleMor& f) {
  if (!(f.dst() == g.src())) throw DimensionError("composing bundle morphisms with mismatched bundles");
  return BundleMor(f.src(), g.dst(), map_compose(g.total(), f.total()), map_compose(g.base(), f.base()));
}

bool is_vertical(const BundleMor& m) {
  return m.src().base == m.dst().base && m.base() == identity(m.src().base);
}

void validate_additive_bundle(const AdditiveBundle& ab) {
  const std::size_t b = ab.bundle.base;
  const std::size_t f = ab.bundle.fiber;
  if (ab.zero.dom() != b || ab.zero.cod() != b + f || ab.plus.dom() != b + 2 * f ||
      ab.plus.cod() != b + f) {
    throw InstanceError("additive bundle maps have the wrong shape");
  }
  const PolyMap p = ab.bundle.projection();
  if (map_compose(p, ab.zero) != identity(b)) throw InstanceError("bundle zero is not a section");
  const std::size_t dims3[] = {b, f, f};
  if (map_compose(p, ab.plus) != projection(dims3, 0)) {
    throw InstanceError("bundle addition is not vertical");
  }
  const PolyMap fiber_of = projection({b, f}, 1);
  {
    const std::size_t dims[] = {b, f};
    const PolyMap pb = projection(dims, 0);
    const PolyMap zero_fiber = map_compose(fiber_of, map_compose(ab.zero, pb));
    const PolyMap unit = map_compose(ab.plus, map_tuple({pb, zero_fiber, projection(dims, 1)}, b + f));
    if (unit != identity(b + f)) throw InstanceError("bundle zero is not a unit");
  }
  const std::size_t dims[] = {b, f, f, f};
  const std::size_t dom = b + 3 * f;
  const PolyMap pb = projection(dims, 0);
  const PolyMap u = projection(dims, 1);
  const PolyMap w = projection(dims, 2);
  const PolyMap z = projection(dims, 3);
  auto plus = [&](const PolyMap& x, const PolyMap& y) {
    return map_compose(fiber_of, map_compose(ab.plus, map_tuple({pb, x, y}, dom)));
  };
  if (plus(u, w) != plus(w, u)) throw InstanceError("bundle addition is not commutative");
  if (plus(plus(u, w), z) != plus(u, plus(w, z))) {
    throw InstanceError("bundle addition is not associative");
  }
}

BundlePullback bundle_pullback(const PolyMap& g, const TrivBundle& b) {
  if (g.cod() != b.base) throw DimensionError("pulling back a bundle along a map into the wrong base");
  const TrivBundle pulled{g.dom(), b.fiber};
  return {pulled, BundleMor(pulled, b, map_product(g, identity(b.fiber)), g)};
}

std::optional<BundleMor> factor_through_pullback(const BundlePullback& pb, const BundleMor& h,
                                                 const PolyMap& u) {
  if (!(h.dst() == pb.cartesian.dst()) || u.dom() != h.src().base || u.cod() != pb.bundle.base) {
    throw DimensionError("pullback factorization problem is ill-typed");
  }
  if (map_compose(pb.cartesian.base(), u) != h.base()) return std::nullopt;
  const TrivBundle& target = pb.cartesian.dst();
  const PolyMap fiber = map_compose(projection({target.base, target.fiber}, 1), h.total());
  const PolyMap total = map_pair(map_compose(u, h.src().projection()), fiber);
  BundleMor k(h.src(), pb.bundle, total, u);
  if (!(bundle_compose(pb.cartesian, k) == h)) return std::nullopt;
  return k;
}

PullbackPower pullback_power(const TrivBundle& b, std::size_t n) {
  const TrivBundle power{b.base, n * b.fiber};
  std::vector<std::size_t> dims{b.base};
  dims.insert(dims.end(), n, b.fiber);
  const PolyMap pb = projection(dims, 0);
  std::vector<BundleMor> projections;
  for (std::size_t i = 0; i < n; ++i) {
    projections.emplace_back(power, b, map_pair(pb, projection(dims, i + 1)), identity(b.base));
  }
  return {power, std::move(projections)};
}

BundleMor bundle_power_map(const BundleMor& m, std::size_t n) {
  const PullbackPower from = pullback_power(m.src(), n);
  const PullbackPower to = pullback_power(m.dst(), n);
  const PolyMap fiber_of = projection({m.dst().base, m.dst().fiber}, 1);
  std::vector<PolyMap> parts{map_compose(m.base(), from.bundle.projection())};
  for (const BundleMor& p : from.projections) {
    parts.push_back(map_compose(fiber_of, map_compose(m.total(), p.total())));
  }
  return BundleMor(from.bundle, to.bundle, map_tuple(parts, from.bundle.total()), m.base());
}

AdditiveBundle tangent_section_T(std::size_t a) {
  const std::size_t dims[] = {a, a, a};
  const PolyMap pb = projection(dims, 0);
  return {{a, a},
          map_pair(identity(a), map_zero(a, a)),
          map_pair(pb, map_add(projection(dims, 1), projection(dims, 2)))};
}

BundleMor tangent_on_map(const PolyMap& f) {
  const std::size_t a = f.dom();
  const PolyMap total = map_pair(map_compose(f, projection({a, a}, 0)), jacobian_action(f));
  return BundleMor({a, a}, {f.cod(), f.cod()}, total, f);
}

std::size_t dom_plus(const AdditiveBundle& b) { return b.bundle.total(); }

PolyMap tangent_shuffle(std::size_t b, std::size_t f) {
  const std::size_t dims[] = {b, f, b, f};
  return map_tuple({projection(dims, 0), projection(dims, 2), projection(dims, 1), projection(dims, 3)},
                   2 * (b + f));
}

PolyMap pullback_power_comparison(std::size_t b, std::size_t n) {
  const PullbackPower power = pullback_power({b, b}, n);
  const std::size_t total = power.bundle.total();
  const PolyMap shuffle = tangent_shuffle(b, b);
  // Base part tau(p), then the fibre part of shuffle o tau(pi_i) for each factor.
  std::vector<PolyMap> parts{tangent_on_map(power.bundle.projection()).total()};
  const PolyMap fiber_of = projection({2 * b, 2 * b}, 1);
  for (const BundleMor& p : power.projections) {
    const PolyMap tp = tangent_on_map(p.total()).total();
    parts.push_back(map_compose(fiber_of, map_compose(shuffle, tp)));
  }
  return map_tuple(parts, 2 * total);
}

BundleSpan reverse_tangent_span(const PolyMap& f) {
  const std::size_t a = f.dom();
  const std::size_t b = f.cod();
  const BundlePullback pb = bundle_pullback(f, tangent_section_T(b).bundle);
  const PolyMap total = map_pair(projection({a, b}, 0), jacobian_transpose_action(f));
  return {pb.cartesian, BundleMor(pb.bundle, tangent_section_T(a).bundle, total, identity(a))};
}

LensMor reverse_tangent_section(const PolyMap& f) {
  const BundleSpan span = reverse_tangent_span(f);
  const std::size_t a = f.dom();
  const PolyMap fib = map_compose(projection({a, a}, 1), span.vertical.total());
  LensMor lens({a, a}, {f.cod(), f.cod()}, span.cartesian.base(), fib);
  if (!(lens == reverse_section_R(f))) {
    throw InvariantError("reverse tangent section disagrees with the lens section");
  }
  return lens;
}

}  // namespace fodlab
