#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fodlab/dual.hpp"
#include "fodlab/poly.hpp"

namespace fodlab {

using Vector = std::vector<Rational>;

/// Morphism dom -> cod of the base category: cod polynomials in dom variables.
///
/// Objects are dimensions; the product of m and n is m + n with the left
/// block first. Dimension 0 is terminal.
class PolyMap {
 public:
  PolyMap() = default;
  /// Throws ArityError unless every component has arity `dom`.
  PolyMap(std::size_t dom, std::vector<Poly> components);

  std::size_t dom() const noexcept { return dom_; }
  std::size_t cod() const noexcept { return components_.size(); }
  const std::vector<Poly>& components() const noexcept { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }

  int degree() const;

  bool operator==(const PolyMap&) const = default;

 private:
  std::size_t dom_ = 0;
  std::vector<Poly> components_;
};

// Cartesian structure.

PolyMap identity(std::size_t n);
/// Projection from dims[0] + dims[1] + ... onto block `block`.
PolyMap projection(std::span<const std::size_t> dims, std::size_t block);
PolyMap projection(std::initializer_list<std::size_t> dims, std::size_t block);
/// The unique map m -> 0.
PolyMap terminal(std::size_t m);
/// Pairing <f, g>; requires f.dom == g.dom.
PolyMap map_pair(const PolyMap& f, const PolyMap& g);
/// n-ary pairing; an empty list needs the shared domain explicitly.
PolyMap map_tuple(std::span<const PolyMap> maps, std::size_t dom);
PolyMap map_tuple(std::initializer_list<PolyMap> maps, std::size_t dom);
/// f x g : f.dom + g.dom -> f.cod + g.cod.
PolyMap map_product(const PolyMap& f, const PolyMap& g);
/// g o f; requires f.cod == g.dom.
PolyMap map_compose(const PolyMap& g, const PolyMap& f);
PolyMap constant_map(std::size_t dom, const Vector& value);

// Left-additive structure (coordinatewise monoid on every object).

PolyMap map_add(const PolyMap& f, const PolyMap& g);
PolyMap map_zero(std::size_t m, std::size_t n);
PolyMap map_negate(const PolyMap& f);
PolyMap map_scale(const Rational& c, const PolyMap& f);
/// The chosen addition n + n -> n.
PolyMap addition(std::size_t n);

/// f o (+) = (+) o (f x f) and f o 0 = 0, checked as polynomial identities.
bool is_additive(const PolyMap& f);
/// Every component is homogeneous of degree 1 (or zero).
bool is_homogeneous_linear(const PolyMap& f);

/// f : base + fiber -> n is additive in its trailing fiber block:
/// f(a, h + k) = f(a, h) + f(a, k) and f(a, 0) = 0.
bool is_additive_in_fiber(const PolyMap& f, std::size_t base_dim, std::size_t fiber_dim);
/// Degree-based test of the same property: every term has fiber degree 1.
bool is_fiber_linear(const PolyMap& f, std::size_t base_dim, std::size_t fiber_dim);

// Coordinate permutations.

/// If every component is a distinct bare variable covering all of them,
/// returns perm with component i = x_{perm[i]}.
std::optional<std::vector<std::size_t>> as_permutation(const PolyMap& f);
PolyMap permutation_map(std::span<const std::size_t> perm);
std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

// Differentiation and evaluation.

Poly partial(const Poly& p, std::size_t var);
/// (a, v) |-> sum_j df/dx_j(a) v_j, a map m + m -> n.
PolyMap jacobian_action(const PolyMap& f);
/// (a, w) |-> J_f(a)^T w, a map m + n -> m.
PolyMap jacobian_transpose_action(const PolyMap& f);
Vector eval_point(const PolyMap& f, std::span<const Rational> point);
std::vector<double> eval_point_double(const PolyMap& f, std::span<const double> point);
/// Evaluates f over dual numbers at point + eps * direction.
std::pair<Vector, Vector> eval_dual(const PolyMap& f, std::span<const Rational> point,
                                    std::span<const Rational> direction);

/// "[e0; e1; ...] : m -> n", parseable by parse_map.
std::string to_literal(const PolyMap& f);

}  // namespace fodlab
