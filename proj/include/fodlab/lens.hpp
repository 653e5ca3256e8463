#pragma once

#include "fodlab/simple.hpp"

namespace fodlab {

/// Lens (A', A) -> (B', B): forward map A -> B and backward map A x B' -> A'.
class LensMor {
 public:
  /// Throws DimensionError when the arity discipline is violated.
  LensMor(SimpleObj src, SimpleObj dst, PolyMap base, PolyMap fib);

  const SimpleObj& src() const { return src_; }
  const SimpleObj& dst() const { return dst_; }
  const PolyMap& base() const { return base_; }
  const PolyMap& fib() const { return fib_; }

  bool operator==(const LensMor&) const = default;

 private:
  SimpleObj src_;
  SimpleObj dst_;
  PolyMap base_;
  PolyMap fib_;
};

LensMor lens_identity(const SimpleObj& x);
/// g after f: fib(a, c') = f.fib(a, g.fib(f.base(a), c')).
LensMor lens_compose(const LensMor& g, const LensMor& f);
LensMor lens_add(const LensMor& f, const LensMor& g);
LensMor lens_zero(const SimpleObj& x, const SimpleObj& y);

struct LensProduct {
  SimpleObj object;
  LensMor first;
  LensMor second;
};

/// Projections have fib <pi_{A'}, 0> and <0, pi_{B'}>.
LensProduct lens_product(const SimpleObj& x, const SimpleObj& y);
/// fib = f.fib o <pi_X, pi_{Y1'}> + g.fib o <pi_X, pi_{Y2'}>.
LensMor lens_pair(const LensMor& f, const LensMor& g);

/// Span X <- f*Y -> Y with a vertical left leg and a cartesian right leg.
struct Span {
  SimpleMor cartesian;
  SimpleMor vertical;
};

/// Throws InvariantError if the legs are not cartesian/vertical or do not share an apex.
LensMor dual_of_simple(const Span& s);
Span span_of_lens(const LensMor& l);
/// Composition of spans by pulling back g's vertical leg along f's cartesian leg.
Span span_compose(const Span& g, const Span& f);

/// The stationary reverse-derivative section: f |-> (f, rho f) with rho f(a, w) = J_f(a)^T w.
LensMor reverse_section_R(const PolyMap& f);

/// fib is additive in its cotangent argument.
bool is_cla_lens(const LensMor& l);

}  // namespace fodlab
