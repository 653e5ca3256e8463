#include <doctest.h>

#include "fodlab/errors.hpp"
#include "fodlab/monoid.hpp"
#include "fodlab/mutants.hpp"
#include "fodlab/simple.hpp"
#include "fodlab/suites.hpp"
#include "support.hpp"

using namespace fodlab;
using namespace fodlab::test;

namespace {

SimpleObj random_obj(Generator& g) { return {g.dim(), g.dim()}; }

SimpleMor random_mor(Generator& g, const SimpleObj& x, const SimpleObj& y) {
  return SimpleMor(x, y, g.map(x.base, y.base), g.map(x.total(), y.fiber));
}

}  // namespace

TEST_CASE("simple morphisms check arities") {
  CHECK_THROWS_AS(SimpleMor({1, 1}, {1, 1}, identity(1), identity(1)), DimensionError);
  CHECK_THROWS_AS(SimpleMor({1, 1}, {1, 1}, identity(2), projection({1, 1}, 1)), DimensionError);
}

TEST_CASE("composition") {
  const SimpleObj x{1, 1};
  const SimpleMor f(x, x, M("[x0^2] : 1 -> 1"), M("[2*x0*x1] : 2 -> 1"));
  const SimpleMor g(x, x, M("[x0^3] : 1 -> 1"), M("[3*x0^2*x1] : 2 -> 1"));
  const SimpleMor gf = simple_compose(g, f);
  CHECK(gf.base() == M("[x0^6] : 1 -> 1"));
  CHECK(gf.fib() == M("[6*x0^5*x1] : 2 -> 1"));
  // Oracle: the dual-number derivative of x^6.
  for (std::uint64_t t = 0; t < 5; ++t) {
    Generator r = gen_for(t, 10);
    const Vector a{r.rational()}, v{r.rational()};
    CHECK(eval_point(gf.fib(), concat(a, v)) == eval_dual(M("[x0^6] : 1 -> 1"), a, v).second);
  }
  CHECK(simple_compose(f, simple_identity(x)) == f);
  CHECK(simple_compose(simple_identity(x), f) == f);
  CHECK_THROWS_AS(simple_compose(f, SimpleMor({2, 1}, {1, 2}, M("[x0] : 2 -> 1"), M("[x0; x1] : 3 -> 2"))),
                  DimensionError);
}

TEST_CASE("composition is associative") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    Generator g = gen_for(t, 11);
    const SimpleObj a = random_obj(g), b = random_obj(g), c = random_obj(g), d = random_obj(g);
    const SimpleMor f = random_mor(g, a, b), h = random_mor(g, b, c), k = random_mor(g, c, d);
    CHECK(simple_compose(k, simple_compose(h, f)) == simple_compose(simple_compose(k, h), f));
  }
}

TEST_CASE("classification") {
  const SimpleObj x{1, 1};
  CHECK(classify(SimpleMor(x, x, M("[x0^2] : 1 -> 1"), projection({1, 1}, 1))) == MorphismKind::cartesian);
  CHECK(classify(SimpleMor(x, x, identity(1), M("[x0*x1 + x1^3] : 2 -> 1"))) == MorphismKind::vertical);
  CHECK(classify(SimpleMor(x, x, M("[x0^2] : 1 -> 1"), M("[2*x0*x1] : 2 -> 1"))) == MorphismKind::neither);
  CHECK(classify(simple_identity({2, 3})) == MorphismKind::both);
  CHECK(std::string(to_string(MorphismKind::cartesian)) == "cartesian");
}

TEST_CASE("vertical-cartesian factorization") {
  const SimpleObj x{1, 1};
  const SimpleMor cart(x, x, M("[x0^2] : 1 -> 1"), projection({1, 1}, 1));
  const Factorization fc = vertical_cartesian_factor(cart);
  CHECK(fc.vertical == simple_identity(x));
  CHECK(fc.cartesian == cart);

  const SimpleMor vert(x, x, identity(1), M("[x0*x1] : 2 -> 1"));
  const Factorization fv = vertical_cartesian_factor(vert);
  CHECK(fv.vertical == vert);
  CHECK(fv.cartesian == simple_identity(x));

  const SimpleMor m(x, x, M("[x0^2] : 1 -> 1"), M("[2*x0*x1] : 2 -> 1"));
  const Factorization f = vertical_cartesian_factor(m);
  CHECK(f.vertical == SimpleMor(x, x, identity(1), M("[2*x0*x1] : 2 -> 1")));
  CHECK(f.cartesian == cart);
  CHECK(simple_compose(f.cartesian, f.vertical) == m);
}

TEST_CASE("factorization is unique on samples") {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Generator g = gen_for(t, 12);
    const SimpleObj a = random_obj(g), b = random_obj(g);
    const SimpleMor m = random_mor(g, a, b);
    const Factorization f = vertical_cartesian_factor(m);
    CHECK(is_vertical(f.vertical));
    CHECK(is_cartesian(f.cartesian));
    CHECK(simple_compose(f.cartesian, f.vertical) == m);
    // Any cartesian over m.base is (m.base, pi); solving cart o v = m for a vertical v
    // forces v.fib = m.fib coordinate by coordinate.
    const std::optional<SimpleMor> k = factor_through_cartesian(f.cartesian, m, identity(a.base));
    REQUIRE(k.has_value());
    CHECK(*k == f.vertical);
  }
}

TEST_CASE("reindexing") {
  const SimpleObj obj{2, 3};
  const Reindexing same = reindex(identity(2), obj);
  CHECK(same.object == obj);
  CHECK(same.lift == simple_identity(obj));

  const PolyMap f = M("[x0^2; x0 - 1] : 1 -> 2");
  const Reindexing r = reindex(f, obj);
  CHECK(r.object == SimpleObj{1, 3});
  CHECK(r.lift.base() == f);
  CHECK(r.lift.fib() == projection({1, 3}, 1));
  CHECK(is_cartesian(r.lift));

  for (std::uint64_t t = 0; t < 100; ++t) {
    Generator g = gen_for(t, 13);
    const SimpleObj a = random_obj(g), b = random_obj(g);
    const SimpleMor m = random_mor(g, a, b);
    const Reindexing ri = reindex(m.base(), b);
    const std::optional<SimpleMor> k = factor_through_cartesian(ri.lift, m, identity(a.base));
    REQUIRE(k.has_value());
    CHECK(*k == vertical_cartesian_factor(m).vertical);
  }
  const SimpleMor vert({1, 1}, {1, 1}, identity(1), M("[x1] : 2 -> 1"));
  const SimpleMor not_cartesian({1, 1}, {1, 1}, identity(1), M("[2*x1] : 2 -> 1"));
  CHECK_THROWS_AS(factor_through_cartesian(not_cartesian, vert, identity(1)), InvariantError);
  // h.base = x is not x^2 o id, so there is no lift over id.
  const SimpleMor cart = reindex(M("[x0^2] : 1 -> 1"), {1, 1}).lift;
  CHECK_FALSE(factor_through_cartesian(cart, vert, identity(1)).has_value());
}

TEST_CASE("products") {
  const SimpleProduct p = simple_product({1, 2}, {3, 4});
  CHECK(p.object == SimpleObj{4, 6});
  CHECK(fibred_product({2, 2}, {2, 3}) == SimpleObj{2, 5});
  CHECK_THROWS_AS(fibred_product({1, 2}, {2, 3}), DimensionError);
  for (std::uint64_t t = 0; t < 50; ++t) {
    Generator g = gen_for(t, 14);
    const SimpleObj a = random_obj(g), b = random_obj(g), c = random_obj(g);
    const SimpleMor f = random_mor(g, a, b), h = random_mor(g, a, c);
    const SimpleProduct bc = simple_product(b, c);
    CHECK(simple_compose(bc.first, simple_pair(f, h)) == f);
    CHECK(simple_compose(bc.second, simple_pair(f, h)) == h);
    CHECK(simple_pair(bc.first, bc.second) == simple_identity(bc.object));
  }
}

TEST_CASE("cartesian maps are closed under composition and products") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    Generator g = gen_for(t, 15);
    const SimpleObj c = random_obj(g);
    const std::size_t fib = c.fiber;
    const SimpleObj b{g.dim(), fib}, a{g.dim(), fib};
    const SimpleMor h = reindex(g.map(b.base, c.base), c).lift;
    const SimpleMor f = reindex(g.map(a.base, b.base), b).lift;
    CHECK(classify(simple_compose(h, f)) != MorphismKind::neither);
    CHECK(is_cartesian(simple_compose(h, f)));
    CHECK(is_cartesian(simple_product_map(h, f)));
  }
}

TEST_CASE("additive in the fibre") {
  const SimpleObj x{1, 1};
  CHECK(is_cla_morphism(SimpleMor(x, x, M("[x0^2] : 1 -> 1"), M("[2*x0*x1] : 2 -> 1"))));
  CHECK_FALSE(is_cla_morphism(SimpleMor(x, x, identity(1), M("[x1^2] : 2 -> 1"))));
  CHECK(is_cla_morphism(SimpleMor(x, x, identity(1), projection({1, 1}, 1))));
}

TEST_CASE("forward derivative section") {
  CHECK(forward_section_D(identity(3)).fib() == projection({3, 3}, 1));
  const PolyMap pa = projection({2, 1}, 0);
  CHECK(forward_section_D(pa).fib() == map_compose(pa, projection({3, 3}, 1)));
  CHECK(forward_section_D(M("[x0^2] : 1 -> 1")).fib() == M("[2*x0*x1] : 2 -> 1"));
  const SimpleMor dxy = forward_section_D(M("[x0*x1] : 2 -> 1"));
  CHECK(dxy.fib() == M("[x1*x2 + x0*x3] : 4 -> 1"));
  for (std::uint64_t t = 0; t < 5; ++t) {
    Generator g = gen_for(t, 16);
    const Vector a = g.vector(2), v = g.vector(2);
    CHECK(eval_point(dxy.fib(), concat(a, v)) == eval_dual(M("[x0*x1] : 2 -> 1"), a, v).second);
  }
}

TEST_CASE("forward derivative is a CLA functor") {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Generator g = gen_for(t, 17);
    const std::size_t a = g.dim(), b = g.dim(), c = g.dim();
    const PolyMap f = g.map(a, b), f2 = g.map(a, b), h = g.map(b, c), k = g.map(a, c);
    CHECK(forward_section_D(map_compose(h, f)) == simple_compose(forward_section_D(h), forward_section_D(f)));
    CHECK(forward_section_D(identity(a)) == simple_identity({a, a}));
    CHECK(forward_section_D(map_pair(f, k)) == simple_pair(forward_section_D(f), forward_section_D(k)));
    const SimpleProduct p = simple_product({b, b}, {c, c});
    CHECK(forward_section_D(projection({b, c}, 0)) == p.first);
    CHECK(forward_section_D(projection({b, c}, 1)) == p.second);
    CHECK(forward_section_D(map_add(f, f2)) == simple_add(forward_section_D(f), forward_section_D(f2)));
    CHECK(forward_section_D(map_zero(a, b)) == simple_zero({a, a}, {b, b}));
  }
}

TEST_CASE("chain rule on x^2 and x^3") {
  const PolyMap f = M("[x0^2] : 1 -> 1"), g = M("[x0^3] : 1 -> 1");
  const PolyMap lhs = jacobian_action(map_compose(g, f));
  const PolyMap rhs = map_compose(jacobian_action(g), map_pair(map_compose(f, projection({1, 1}, 0)), jacobian_action(f)));
  CHECK(lhs == M("[6*x0^5*x1] : 2 -> 1"));
  CHECK(rhs == lhs);
}

TEST_CASE("monoids") {
  CHECK_NOTHROW(validate_monoid(standard_monoid(3)));
  CHECK_NOTHROW(validate_monoid(standard_fibre_monoid(2, 3)));
  CommutativeMonoid bad = standard_monoid(1);
  bad.plus = M("[x0 - x1] : 2 -> 1");
  CHECK_THROWS_AS(validate_monoid(bad), InstanceError);
  bad.plus = M("[x0 + x1 + x0*x1] : 2 -> 1");
  CHECK_NOTHROW(validate_monoid(bad));  // lawful, though not coordinatewise
  bad.zero = M("[1] : 0 -> 1");
  CHECK_THROWS_AS(validate_monoid(bad), InstanceError);
}

TEST_CASE("derivatives are monoid maps in the fibre") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    Generator g = gen_for(t, 18);
    const std::size_t a = g.dim(), b = g.dim();
    const SimpleMor d = forward_section_D(g.map(a, b));
    CHECK(splus_check({d, standard_fibre_monoid(a, a), standard_fibre_monoid(b, b)}));
  }
  const SimpleMor sq({1, 1}, {1, 1}, identity(1), M("[x1^2] : 2 -> 1"));
  CHECK_FALSE(splus_check({sq, standard_fibre_monoid(1, 1), standard_fibre_monoid(1, 1)}));
  const SimpleMor lin({1, 1}, {1, 1}, identity(1), M("[x0*x1] : 2 -> 1"));
  CHECK(fibre_doubling(lin) == M("[x0; x0*x1; x0*x2] : 3 -> 3"));
}

TEST_CASE("cdc suite") {
  GenParams p;
  const AxiomReport r = cdc_axiom_suite(p, 50);
  CHECK(r.laws.size() == 5);
  CHECK(r.passed());
  const AxiomReport bad = cdc_axiom_suite(p, 50, corrupted_delta);
  CHECK_FALSE(bad.passed());
  for (const LawRecord& l : bad.laws) {
    CHECK(l.passed == (l.law != "CDC.5"));
    CHECK(l.counterexample.has_value() == !l.passed);
  }
}
