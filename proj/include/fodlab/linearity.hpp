#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fodlab/monoid.hpp"
#include "fodlab/report.hpp"
#include "fodlab/simple.hpp"

namespace fodlab {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination; nullopt if singular or not square.
std::optional<Matrix> invert_matrix(const Matrix& m);

/// Vertical isomorphism t : TB -> B x B over B.
///
/// Supported trivializations are fibrewise affine, (b, v) |-> (b, M v + c(b))
/// with M a constant invertible matrix. They are additive exactly when c = 0.
struct Trivialization {
  std::size_t object = 0;
  PolyMap fwd;
  PolyMap inv;

  static Trivialization identity(std::size_t b);
  /// (b, v) |-> (b, M v). Throws InvariantError if M is singular.
  static Trivialization from_matrix(const Matrix& m);
  /// Inverts a fibrewise affine vertical map. Throws InvariantError outside that class.
  static Trivialization from_forward(const PolyMap& fwd);

  bool operator==(const Trivialization&) const = default;
};

/// Inverse of (b, v) |-> (b, M v + c(b)) with M constant, or nullopt.
std::optional<PolyMap> invert_vertical(const PolyMap& fwd, std::size_t base_dim);
/// Throws InvariantError unless t is a vertical isomorphism with the given inverse.
void validate(const Trivialization& t);
bool is_additive_trivialization(const Trivialization& t);

/// Both ways of stating linearity of f, with the sides of each square.
struct LinearityCheck {
  bool full = false;
  bool reduced = false;
  PolyMap full_lhs, full_rhs;        // tB o Tf and (f x f) o tA
  PolyMap reduced_lhs, reduced_rhs;  // pi_2 o tB o Tf and f o pi_2 o tA
};

LinearityCheck linearity_check(const PolyMap& f, const Trivialization& ta, const Trivialization& tb);
/// Throws DimensionError on arity mismatch and std::logic_error if the two verdicts disagree.
bool is_linear_map(const PolyMap& f, const Trivialization& ta, const Trivialization& tb);

struct DifferentialObject {
  std::size_t object = 0;
  PolyMap phat;  // TB -> B
  PolyMap zero;  // 0 -> B
  PolyMap plus;  // B x B -> B

  bool operator==(const DifferentialObject&) const = default;
};

/// Product cone, monoid laws and the four differential-object diagrams, one law each.
AxiomReport check_differential_object(const DifferentialObject& d);

/// phat := pi_2 o t.
DifferentialObject diff_from_lin(const Trivialization& t, const CommutativeMonoid& m);
/// t := <p, phat>. Throws InvariantError if that map is not an isomorphism of the supported shape.
Trivialization lin_from_diff(const DifferentialObject& d);

/// phat' o Tf = f o phat. Throws std::logic_error if the verdict differs from is_linear_map.
bool is_diff_linear_map(const PolyMap& f, const DifferentialObject& da, const DifferentialObject& db);

/// (f, pi_2 o tB o Tf o tA^{-1}) between (A over A) and (B over B).
SimpleMor dT_derivative(const PolyMap& f, const Trivialization& ta, const Trivialization& tb);

/// T(B1 x B2) = (b1, b2, v1, v2) reordered as TB1 x TB2 = (b1, v1, b2, v2).
PolyMap tangent_product_shuffle(std::size_t b1, std::size_t b2);
/// shuffle^{-1} o (t1 x t2) o shuffle.
Trivialization lin_product(const Trivialization& t1, const Trivialization& t2);

}  // namespace fodlab
