#include <doctest.h>

#include "fodlab/errors.hpp"
#include "fodlab/linearity.hpp"
#include "fodlab/suites.hpp"
#include "support.hpp"

using namespace fodlab;
using namespace fodlab::test;

namespace {

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), std::vector<Rational>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

DifferentialObject standard_object(std::size_t b) {
  return diff_from_lin(Trivialization::identity(b), standard_monoid(b));
}

bool law_passed(const AxiomReport& r, const std::string& law) {
  for (const LawRecord& l : r.laws) {
    if (l.law == law) return l.passed;
  }
  FAIL("no law " << law);
  return false;
}

}  // namespace

TEST_CASE("matrix inversion") {
  const Matrix m{{Q(2), Q(0)}, {Q(0), Q(1, 2)}};
  CHECK(invert_matrix(m) == Matrix{{Q(1, 2), Q(0)}, {Q(0), Q(2)}});
  CHECK_FALSE(invert_matrix({{Q(1), Q(2)}, {Q(2), Q(4)}}).has_value());
  CHECK_FALSE(invert_matrix({{Q(1), Q(2)}}).has_value());
  CHECK(invert_matrix({}) == Matrix{});
  for (std::uint64_t t = 0; t < 50; ++t) {
    Generator g = gen_for(t, 50, 4);
    const std::size_t n = g.dim();
    const Matrix a = g.invertible_matrix(n);
    const Matrix prod = multiply(a, *invert_matrix(a));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(prod[i][j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("trivializations") {
  const Trivialization t = Trivialization::from_matrix({{Q(2)}});
  CHECK(t.fwd == M("[x0; 2*x1] : 2 -> 2"));
  CHECK(t.inv == M("[x0; 1/2*x1] : 2 -> 2"));
  CHECK(is_additive_trivialization(t));
  CHECK_THROWS_AS(Trivialization::from_matrix({{Q(0)}}), InvariantError);
  CHECK_THROWS_AS(Trivialization::from_forward(M("[x0; x1^3] : 2 -> 2")), InvariantError);
  CHECK_THROWS_AS(Trivialization::from_forward(M("[x0 + x1; x1] : 2 -> 2")), InvariantError);
  const Trivialization affine = Trivialization::from_forward(M("[x0; 3*x1 + x0^2] : 2 -> 2"));
  CHECK(affine.inv == M("[x0; 1/3*x1 - 1/3*x0^2] : 2 -> 2"));
  CHECK_FALSE(is_additive_trivialization(affine));
  CHECK_NOTHROW(validate(affine));
  Trivialization broken = t;
  broken.inv = identity(2);
  CHECK_THROWS_AS(validate(broken), InvariantError);
}

TEST_CASE("linear maps") {
  const Trivialization id1 = Trivialization::identity(1);
  CHECK(is_linear_map(M("[3*x0] : 1 -> 1"), id1, id1));
  CHECK_FALSE(is_linear_map(M("[x0^2] : 1 -> 1"), id1, id1));
  const LinearityCheck c = linearity_check(M("[x0^2] : 1 -> 1"), id1, id1);
  CHECK(c.reduced_lhs == M("[2*x0*x1] : 2 -> 1"));
  CHECK(c.reduced_rhs == M("[x1^2] : 2 -> 1"));
  for (std::uint64_t s = 0; s < 30; ++s) {
    Generator g = gen_for(s, 51);
    const std::size_t n = g.dim();
    const Trivialization t = g.trivialization(n, g.below(2) == 0);
    CHECK(is_linear_map(identity(n), t, t));
  }
  CHECK_THROWS_AS(is_linear_map(M("[x0] : 1 -> 1"), Trivialization::identity(2), id1), DimensionError);
}

TEST_CASE("linearity on 1 -> 1 maps of degree at most 2") {
  const Trivialization id1 = Trivialization::identity(1);
  int linear = 0;
  for (int c0 = -1; c0 <= 1; ++c0)
    for (int c1 = -1; c1 <= 1; ++c1)
      for (int c2 = -1; c2 <= 1; ++c2) {
        const PolyMap f(1, {Poly::constant(1, c0) + Q(c1) * Poly::variable(1, 0) + Q(c2) * Poly::variable(1, 0).pow(2)});
        const bool lin = is_linear_map(f, id1, id1);
        CHECK(lin == is_additive(f));
        CHECK(lin == (c0 == 0 && c2 == 0));
        linear += lin;
      }
  CHECK(linear == 3);
}

TEST_CASE("differential objects") {
  CHECK(standard_object(2).phat == projection({2, 2}, 1));
  CHECK(check_differential_object(standard_object(2)).passed());
  for (std::uint64_t s = 0; s < 20; ++s) {
    Generator g = gen_for(s, 52);
    const std::size_t n = g.dim();
    const DifferentialObject add = diff_from_lin(g.trivialization(n, true), standard_monoid(n));
    CHECK(check_differential_object(add).passed());
    const DifferentialObject affine = diff_from_lin(g.trivialization(n, false), standard_monoid(n));
    CHECK_FALSE(check_differential_object(affine).passed());
  }
  // x + y + xy is a lawful commutative monoid but T(+) does not match.
  DifferentialObject d = standard_object(1);
  d.plus = M("[x0 + x1 + x0*x1] : 2 -> 1");
  const AxiomReport r = check_differential_object(d);
  CHECK(law_passed(r, "commutative monoid"));
  CHECK_FALSE(law_passed(r, "T plus"));
}

TEST_CASE("differential objects and trivializations correspond") {
  const DifferentialObject d = diff_from_lin(Trivialization::from_matrix({{Q(2)}}), standard_monoid(1));
  CHECK(d.phat == M("[2*x1] : 2 -> 1"));
  CHECK(lin_from_diff(d) == Trivialization::from_matrix({{Q(2)}}));
  for (std::uint64_t s = 0; s < 50; ++s) {
    Generator g = gen_for(s, 53);
    const std::size_t n = g.dim();
    const Trivialization t = g.trivialization(n, true);
    const DifferentialObject dt = diff_from_lin(t, standard_monoid(n));
    CHECK(lin_from_diff(dt) == t);
    CHECK(diff_from_lin(lin_from_diff(dt), standard_monoid(n)) == dt);
  }
}

TEST_CASE("differential-linear maps") {
  const DifferentialObject d1 = standard_object(1), d2 = standard_object(2);
  CHECK(is_diff_linear_map(M("[x0 - 2*x1] : 2 -> 1"), d2, d1));
  CHECK_FALSE(is_diff_linear_map(M("[x0^2] : 1 -> 1"), d1, d1));
  for (std::uint64_t s = 0; s < 100; ++s) {
    Generator g = gen_for(s, 54);
    const std::size_t a = g.dim(), b = g.dim();
    const Trivialization ta = g.trivialization(a, true), tb = g.trivialization(b, true);
    const PolyMap f = g.below(2) == 0 ? g.map(a, b) : g.fiber_linear_map(0, a, b);
    CHECK(is_diff_linear_map(f, diff_from_lin(ta, standard_monoid(a)), diff_from_lin(tb, standard_monoid(b))) ==
          is_linear_map(f, ta, tb));
  }
}

TEST_CASE("derivative through trivializations") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Generator g = gen_for(s, 55);
    const PolyMap f = g.map(g.dim(), g.dim());
    CHECK(dT_derivative(f, Trivialization::identity(f.dom()), Trivialization::identity(f.cod())) ==
          forward_section_D(f));
  }
  // tB o tau f o tA^-1 with tA : v |-> 2v and f = x gives v/2.
  const SimpleMor d = dT_derivative(M("[x0] : 1 -> 1"), Trivialization::from_matrix({{Q(2)}}),
                                    Trivialization::identity(1));
  CHECK(d.fib() == M("[1/2*x1] : 2 -> 1"));
  for (std::uint64_t s = 0; s < 50; ++s) {
    Generator g = gen_for(s, 56);
    const std::size_t a = g.dim(), b = g.dim(), c = g.dim();
    const Trivialization ta = g.trivialization(a, true), tb = g.trivialization(b, true),
                         tc = g.trivialization(c, true);
    const PolyMap f = g.map(a, b), h = g.map(b, c);
    CHECK(dT_derivative(map_compose(h, f), ta, tc) == simple_compose(dT_derivative(h, tb, tc), dT_derivative(f, ta, tb)));
  }
}

TEST_CASE("products of trivializations") {
  CHECK(lin_product(Trivialization::identity(1), Trivialization::identity(2)) == Trivialization::identity(3));
  const PolyMap sh = tangent_product_shuffle(1, 2);
  CHECK(map_compose(permutation_map(inverse_permutation(*as_permutation(sh))), sh) == identity(6));
  for (std::uint64_t s = 0; s < 30; ++s) {
    Generator g = gen_for(s, 57);
    const std::size_t a = g.dim(), b = g.dim(), c = g.dim();
    const Trivialization ta = g.trivialization(a, true), tb = g.trivialization(b, true);
    const Trivialization tab = lin_product(ta, tb);
    CHECK(is_linear_map(projection({a, b}, 0), tab, ta));
    CHECK(is_linear_map(projection({a, b}, 1), tab, tb));
    // Maps that are linear for the standard structures and the identity trivializations.
    const PolyMap f = g.fiber_linear_map(0, c, a), h = g.fiber_linear_map(0, c, b);
    const Trivialization ic = Trivialization::identity(c);
    const Trivialization iab = lin_product(Trivialization::identity(a), Trivialization::identity(b));
    CHECK(is_linear_map(map_pair(f, h), ic, iab));
  }
}

TEST_CASE("dT suite") {
  GenParams p;
  p.max_dim = 3;
  p.max_degree = 3;
  CHECK(dT_axiom_suite(p, 20).passed());
}
