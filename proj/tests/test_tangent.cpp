#include <doctest.h>

#include "fodlab/errors.hpp"
#include "fodlab/suites.hpp"
#include "fodlab/tangent.hpp"
#include "support.hpp"

using namespace fodlab;
using namespace fodlab::test;

TEST_CASE("bundle morphisms commute with projections") {
  const TrivBundle b{1, 1};
  CHECK_NOTHROW(BundleMor(b, b, M("[x0^2; x0*x1] : 2 -> 2"), M("[x0^2] : 1 -> 1")));
  CHECK_THROWS_AS(BundleMor(b, b, M("[x1; x0] : 2 -> 2"), identity(1)), InvariantError);
  CHECK(is_vertical(bundle_identity({2, 3})));
}

TEST_CASE("pullbacks") {
  const TrivBundle b{2, 3};
  const BundlePullback same = bundle_pullback(identity(2), b);
  CHECK(same.bundle == b);
  CHECK(same.cartesian == bundle_identity(b));
  const PolyMap g = M("[x0^2; 1 - x0] : 1 -> 2");
  const BundlePullback pb = bundle_pullback(g, b);
  CHECK(pb.bundle == TrivBundle{1, 3});
  CHECK(pb.cartesian.total() == map_product(g, identity(3)));
  // Along g o h equals along h then along g.
  const PolyMap h = M("[x0 + x1] : 2 -> 1");
  const BundlePullback two = bundle_pullback(h, pb.bundle);
  const BundlePullback one = bundle_pullback(map_compose(g, h), b);
  CHECK(one.bundle == two.bundle);
  CHECK(one.cartesian == bundle_compose(pb.cartesian, two.cartesian));
  // Universal property: a map over g o h factors over h.
  const std::optional<BundleMor> k = factor_through_pullback(pb, one.cartesian, h);
  REQUIRE(k.has_value());
  CHECK(bundle_compose(pb.cartesian, *k) == one.cartesian);
  CHECK_FALSE(factor_through_pullback(pb, one.cartesian, M("[x0] : 2 -> 1")).has_value());
}

TEST_CASE("pullback powers") {
  const PullbackPower p0 = pullback_power({2, 3}, 0);
  CHECK(p0.bundle == TrivBundle{2, 0});
  CHECK(p0.projections.empty());
  CHECK(pullback_power({1, 1}, 2).bundle == TrivBundle{1, 2});
  for (std::size_t n = 1; n <= 3; ++n) {
    const PullbackPower p = pullback_power({2, 2}, n);
    REQUIRE(p.projections.size() == n);
    for (const BundleMor& pr : p.projections) {
      CHECK(pr.base() == identity(2));
      CHECK(map_compose(TrivBundle{2, 2}.projection(), pr.total()) == p.bundle.projection());
    }
  }
}

TEST_CASE("tangent bundle") {
  const AdditiveBundle t = tangent_section_T(2);
  CHECK_NOTHROW(validate_additive_bundle(t));
  CHECK(map_compose(t.bundle.projection(), t.zero) == identity(2));
  CHECK(dom_plus(t) == 4);
  CHECK(tangent_on_map(M("[x0^2] : 1 -> 1")).total() == M("[x0^2; 2*x0*x1] : 2 -> 2"));
  for (std::uint64_t s = 0; s < 50; ++s) {
    Generator g = gen_for(s, 40);
    const std::size_t a = g.dim(), b = g.dim();
    const PolyMap f = g.map(a, b);
    CHECK(map_compose(projection({b, b}, 0), tangent_on_map(f).total()) == map_compose(f, projection({a, a}, 0)));
  }
  AdditiveBundle bad = t;
  bad.plus = map_zero(6, 4);
  CHECK_THROWS_AS(validate_additive_bundle(bad), InstanceError);
}

TEST_CASE("naturality of plus on x^2") {
  const BundleMor tf = tangent_on_map(M("[x0^2] : 1 -> 1"));
  const PolyMap lhs = map_compose(tf.total(), tangent_section_T(1).plus);
  const PolyMap rhs = map_compose(tangent_section_T(1).plus, bundle_power_map(tf, 2).total());
  CHECK(lhs == M("[x0^2; 2*x0*x1 + 2*x0*x2] : 3 -> 2"));
  CHECK(lhs == rhs);
}

TEST_CASE("comparison map for A = 1, n = 2") {
  const PolyMap c = pullback_power_comparison(1, 2);
  CHECK(c.dom() == 6);
  CHECK(c.cod() == 6);
  const auto perm = as_permutation(c);
  REQUIRE(perm.has_value());
  const PolyMap inv = permutation_map(inverse_permutation(*perm));
  CHECK(map_compose(c, inv) == identity(6));
  CHECK(map_compose(inv, c) == identity(6));
  CHECK(*perm != std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("tangent shuffle") {
  CHECK(tangent_shuffle(1, 1) == M("[x0; x2; x1; x3] : 4 -> 4"));
  CHECK(tangent_shuffle(2, 0) == identity(4));
}

TEST_CASE("reverse tangent section") {
  CHECK(reverse_tangent_section(identity(2)) == lens_identity({2, 2}));
  CHECK(reverse_tangent_section(M("[x0^2] : 1 -> 1")) == reverse_section_R(M("[x0^2] : 1 -> 1")));
  for (std::uint64_t s = 0; s < 50; ++s) {
    Generator g = gen_for(s, 41);
    const PolyMap f = g.map(g.dim(), g.dim());
    CHECK(reverse_tangent_section(f).base() == f);
  }
}

TEST_CASE("tangent suite") {
  GenParams p;
  p.max_dim = 3;
  p.max_degree = 3;
  const AxiomReport r = tangent_axiom_suite(p, 30);
  CHECK(r.passed());
  CHECK(r.laws.size() == 10);
}
