#include "fodlab/linearity.hpp"

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "fodlab/errors.hpp"
#include "fodlab/tangent.hpp"

// Exact rationals as an Eigen scalar: no rounding, so zero tolerances.
namespace Eigen {
template <>
struct NumTraits<fodlab::Rational> : GenericNumTraits<fodlab::Rational> {
  using Real = fodlab::Rational;
  using NonInteger = fodlab::Rational;
  using Literal = fodlab::Rational;
  using Nested = fodlab::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};
}  // namespace Eigen

namespace fodlab {

std::optional<Matrix> invert_matrix(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) return std::nullopt;
  }
  if (n == 0) return Matrix{};
  using Dense = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
  Dense a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m[i][j];
  Eigen::FullPivLU<Dense> lu(a);
  lu.setThreshold(0);  // exact arithmetic: any nonzero pivot counts
  if (!lu.isInvertible()) return std::nullopt;
  const Dense inv = lu.inverse();
  Matrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = inv(i, j);
  return out;
}

namespace {

// (b, v) |-> M v as a map b + n -> n (or n -> n when b = 0 and only v is used).
PolyMap matrix_action(const Matrix& m, std::size_t base_dim) {
  const std::size_t n = m.size();
  const std::size_t dom = base_dim + n;
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Poly acc = Poly::zero(dom);
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != 0) acc += m[i][j] * Poly::variable(dom, base_dim + j);
    }
    comps.push_back(std::move(acc));
  }
  return PolyMap(dom, std::move(comps));
}

struct AffineFiber {
  Matrix linear;
  PolyMap offset;  // b -> n
};

// Splits the fibre part of a vertical map into M v + c(b); nullopt if it has another shape.
std::optional<AffineFiber> split_affine(const PolyMap& fiber, std::size_t base_dim) {
  const std::size_t n = fiber.cod();
  AffineFiber out{Matrix(n, std::vector<Rational>(n, Rational(0))), PolyMap()};
  std::vector<Poly> offset;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> base_terms;
    for (const Term& t : fiber[i].terms()) {
      std::uint32_t fiber_degree = 0;
      std::size_t var = 0;
      for (std::size_t j = base_dim; j < base_dim + n; ++j) {
        if (t.exponents[j] > 0) var = j;
        fiber_degree += t.exponents[j];
      }
      if (fiber_degree == 0) {
        base_terms.push_back({Exponents(t.exponents.begin(), t.exponents.begin() + base_dim),
                              t.coefficient});
      } else if (fiber_degree == 1 && total_degree(t.exponents) == 1) {
        out.linear[i][var - base_dim] = t.coefficient;
      } else {
        return std::nullopt;
      }
    }
    offset.push_back(Poly::normalize(std::move(base_terms), base_dim));
  }
  out.offset = PolyMap(base_dim, std::move(offset));
  return out;
}

}  // namespace

std::optional<PolyMap> invert_vertical(const PolyMap& fwd, std::size_t b) {
  if (fwd.dom() != 2 * b || fwd.cod() != 2 * b) return std::nullopt;
  const PolyMap pb = projection({b, b}, 0);
  if (map_compose(pb, fwd) != pb) return std::nullopt;
  const std::optional<AffineFiber> parts = split_affine(map_compose(projection({b, b}, 1), fwd), b);
  if (!parts) return std::nullopt;
  const std::optional<Matrix> m_inv = invert_matrix(parts->linear);
  if (!m_inv) return std::nullopt;
  // (b, v) |-> (b, M^{-1} (v - c(b))).
  const PolyMap shifted = map_pair(pb, map_add(projection({b, b}, 1), map_negate(map_compose(parts->offset, pb))));
  return map_pair(pb, map_compose(matrix_action(*m_inv, b), shifted));
}

Trivialization Trivialization::identity(std::size_t b) {
  return {b, fodlab::identity(2 * b), fodlab::identity(2 * b)};
}

Trivialization Trivialization::from_matrix(const Matrix& m) {
  const std::size_t b = m.size();
  const std::optional<Matrix> m_inv = invert_matrix(m);
  if (!m_inv) throw InvariantError("trivialization matrix is not invertible");
  const PolyMap pb = projection({b, b}, 0);
  return {b, map_pair(pb, matrix_action(m, b)), map_pair(pb, matrix_action(*m_inv, b))};
}

Trivialization Trivialization::from_forward(const PolyMap& fwd) {
  if (fwd.dom() % 2 != 0 || fwd.dom() != fwd.cod()) {
    throw InvariantError("trivialization must be a map TB -> B x B");
  }
  const std::size_t b = fwd.dom() / 2;
  std::optional<PolyMap> inv = invert_vertical(fwd, b);
  if (!inv) throw InvariantError("map is not a fibrewise affine vertical isomorphism");
  return {b, fwd, std::move(*inv)};
}

void validate(const Trivialization& t) {
  const std::size_t n = 2 * t.object;
  if (t.fwd.dom() != n || t.fwd.cod() != n || t.inv.dom() != n || t.inv.cod() != n) {
    throw InvariantError("trivialization maps have the wrong shape");
  }
  const PolyMap pb = projection({t.object, t.object}, 0);
  if (map_compose(pb, t.fwd) != pb) throw InvariantError("trivialization is not vertical");
  if (map_compose(t.fwd, t.inv) != identity(n) || map_compose(t.inv, t.fwd) != identity(n)) {
    throw InvariantError("trivialization inverse is wrong");
  }
  if (!invert_vertical(t.fwd, t.object)) {
    throw InvariantError("trivialization is not fibrewise affine with a constant matrix");
  }
}

bool is_additive_trivialization(const Trivialization& t) {
  return is_additive_in_fiber(map_compose(projection({t.object, t.object}, 1), t.fwd), t.object,
                              t.object);
}

LinearityCheck linearity_check(const PolyMap& f, const Trivialization& ta, const Trivialization& tb) {
  if (f.dom() != ta.object || f.cod() != tb.object) {
    throw DimensionError("map " + std::to_string(f.dom()) + " -> " + std::to_string(f.cod()) +
                         " against trivializations of " + std::to_string(ta.object) + " and " +
                         std::to_string(tb.object));
  }
  const PolyMap tf = tangent_on_map(f).total();
  LinearityCheck c;
  c.full_lhs = map_compose(tb.fwd, tf);
  c.full_rhs = map_compose(map_product(f, f), ta.fwd);
  c.full = c.full_lhs == c.full_rhs;
  const PolyMap second_b = projection({tb.object, tb.object}, 1);
  const PolyMap second_a = projection({ta.object, ta.object}, 1);
  c.reduced_lhs = map_compose(second_b, c.full_lhs);
  c.reduced_rhs = map_compose(f, map_compose(second_a, ta.fwd));
  c.reduced = c.reduced_lhs == c.reduced_rhs;
  return c;
}

bool is_linear_map(const PolyMap& f, const Trivialization& ta, const Trivialization& tb) {
  const LinearityCheck c = linearity_check(f, ta, tb);
  if (c.full != c.reduced) throw std::logic_error("full and reduced linearity squares disagree");
  return c.full;
}

DifferentialObject diff_from_lin(const Trivialization& t, const CommutativeMonoid& m) {
  validate(t);
  validate_monoid(m);
  if (m.dim != t.object) throw DimensionError("monoid and trivialization live on different objects");
  return {t.object, map_compose(projection({t.object, t.object}, 1), t.fwd), m.zero, m.plus};
}

Trivialization lin_from_diff(const DifferentialObject& d) {
  const std::size_t b = d.object;
  if (d.phat.dom() != 2 * b || d.phat.cod() != b) throw DimensionError("phat must be TB -> B");
  return Trivialization::from_forward(map_pair(projection({b, b}, 0), d.phat));
}

bool is_diff_linear_map(const PolyMap& f, const DifferentialObject& da, const DifferentialObject& db) {
  if (f.dom() != da.object || f.cod() != db.object) throw DimensionError("map does not match objects");
  const bool verdict =
      map_compose(db.phat, tangent_on_map(f).total()) == map_compose(f, da.phat);
  if (verdict != is_linear_map(f, lin_from_diff(da), lin_from_diff(db))) {
    throw std::logic_error("differential-object linearity disagrees with trivialization linearity");
  }
  return verdict;
}

SimpleMor dT_derivative(const PolyMap& f, const Trivialization& ta, const Trivialization& tb) {
  if (f.dom() != ta.object || f.cod() != tb.object) throw DimensionError("map does not match trivializations");
  const PolyMap whole = map_compose(tb.fwd, map_compose(tangent_on_map(f).total(), ta.inv));
  const PolyMap fib = map_compose(projection({tb.object, tb.object}, 1), whole);
  return SimpleMor({f.dom(), f.dom()}, {f.cod(), f.cod()}, f, fib);
}

PolyMap tangent_product_shuffle(std::size_t b1, std::size_t b2) {
  const std::size_t dims[] = {b1, b2, b1, b2};
  return map_tuple({projection(dims, 0), projection(dims, 2), projection(dims, 1), projection(dims, 3)},
                   2 * (b1 + b2));
}

Trivialization lin_product(const Trivialization& t1, const Trivialization& t2) {
  const std::size_t b1 = t1.object;
  const std::size_t b2 = t2.object;
  const PolyMap shuffle = tangent_product_shuffle(b1, b2);
  const std::optional<std::vector<std::size_t>> perm = as_permutation(shuffle);
  if (!perm) throw std::logic_error("tangent product shuffle is not a permutation");
  const PolyMap unshuffle = permutation_map(inverse_permutation(*perm));
  auto conjugate = [&](const PolyMap& a, const PolyMap& b) {
    return map_compose(unshuffle, map_compose(map_product(a, b), shuffle));
  };
  return {b1 + b2, conjugate(t1.fwd, t2.fwd), conjugate(t1.inv, t2.inv)};
}

}  // namespace fodlab

namespace fodlab {

namespace {

LawRecord diagram(const std::string& law, const std::string& anchor, const PolyMap& lhs,
                  const PolyMap& rhs, const std::vector<std::string>& inputs) {
  LawRecord r{"differential-object", law, anchor, 1, lhs == rhs, std::nullopt};
  if (!r.passed) r.counterexample = Counterexample{inputs, to_literal(lhs), to_literal(rhs)};
  return r;
}

}  // namespace

AxiomReport check_differential_object(const DifferentialObject& d) {
  const std::size_t b = d.object;
  if (d.phat.dom() != 2 * b || d.phat.cod() != b || d.zero.dom() != 0 || d.zero.cod() != b ||
      d.plus.dom() != 2 * b || d.plus.cod() != b) {
    throw DimensionError("differential object maps have the wrong shape");
  }
  AxiomReport report{"differential-object", {}, 0};
  const std::vector<std::string> inputs{to_literal(d.phat), to_literal(d.zero), to_literal(d.plus)};

  LawRecord cone{"differential-object", "product cone", "<p, phat> invertible", 1, true, std::nullopt};
  if (!invert_vertical(map_pair(projection({b, b}, 0), d.phat), b)) {
    cone.passed = false;
    cone.counterexample = Counterexample{inputs, "<p, phat> not invertible", "isomorphism"};
  }
  report.laws.push_back(std::move(cone));

  LawRecord monoid{"differential-object", "commutative monoid", "(0, +) monoid laws", 1, true, std::nullopt};
  try {
    validate_monoid(CommutativeMonoid{b, d.zero, d.plus});
  } catch (const InstanceError& e) {
    monoid.passed = false;
    monoid.counterexample = Counterexample{inputs, e.what(), "monoid laws"};
  }
  report.laws.push_back(std::move(monoid));

  const AdditiveBundle tb = tangent_section_T(b);
  report.laws.push_back(diagram("phat zero", "phat o 0_TB = 0_B o !", map_compose(d.phat, tb.zero),
                                map_compose(d.zero, terminal(b)), inputs));

  const std::size_t dims3[] = {b, b, b};
  const PolyMap pb = projection(dims3, 0);
  const PolyMap first = map_pair(pb, projection(dims3, 1));
  const PolyMap second = map_pair(pb, projection(dims3, 2));
  report.laws.push_back(diagram(
      "phat plus", "phat o +_TB = +_B o <pi1 phat, pi2 phat>", map_compose(d.phat, tb.plus),
      map_compose(d.plus, map_pair(map_compose(d.phat, first), map_compose(d.phat, second))), inputs));

  report.laws.push_back(diagram("T zero", "phat o T(0_B) = 0_B", map_compose(d.phat, tangent_on_map(d.zero).total()),
                                d.zero, inputs));

  // T(B x B) = (b1, b2, v1, v2) is reordered to TB x TB = (b1, v1, b2, v2).
  const PolyMap lhs = map_compose(d.phat, tangent_on_map(d.plus).total());
  const PolyMap rhs =
      map_compose(d.plus, map_compose(map_product(d.phat, d.phat), tangent_product_shuffle(b, b)));
  report.laws.push_back(diagram("T plus", "phat o T(+_B) = +_B o (phat x phat) o shuffle", lhs, rhs, inputs));
  return report;
}

}  // namespace fodlab
