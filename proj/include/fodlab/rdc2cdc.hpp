#pragma once

#include "fodlab/lens.hpp"

namespace fodlab {

/// Object of lenses-of-lenses: an inner (B', B) stacked over an outer (A', A).
struct Lens2Obj {
  SimpleObj outer;
  SimpleObj inner;
  bool operator==(const Lens2Obj&) const = default;
};

/// Lens in the category of CLA lenses: an outer lens (A', A) -> (C', C) and an
/// inner lens (A', A) x (D', D) -> (B', B), whose backward map has type
/// A x D x B' -> A' x D'.
class Lens2Mor {
 public:
  /// Throws DimensionError on arity violations and InvariantError unless both
  /// lenses are additive in their cotangent argument and the inner forward map
  /// is additive in its D block.
  Lens2Mor(Lens2Obj src, Lens2Obj dst, LensMor outer, LensMor inner);

  const Lens2Obj& src() const { return src_; }
  const Lens2Obj& dst() const { return dst_; }
  const LensMor& outer() const { return outer_; }
  const LensMor& inner() const { return inner_; }

  bool operator==(const Lens2Mor&) const = default;

 private:
  Lens2Obj src_;
  Lens2Obj dst_;
  LensMor outer_;
  LensMor inner_;
};

Lens2Mor lens2_identity(const Lens2Obj& x);
Lens2Mor lens2_compose(const Lens2Mor& g, const Lens2Mor& f);
Lens2Mor lens2_add(const Lens2Mor& f, const Lens2Mor& g);

struct Lens2Product {
  Lens2Obj object;
  Lens2Mor first;
  Lens2Mor second;
};

Lens2Product lens2_product(const Lens2Obj& x, const Lens2Obj& y);

/// Keeps the outer base components: (B' over A).
SimpleObj phi(const Lens2Obj& x);
/// Base m.outer.base; fiber pi_{D'} o m.inner.fib o <pi_A, 0, pi_{B'}>.
SimpleMor phi(const Lens2Mor& m);

/// Applies R to both halves of a lens. The product (A, A) x (C', C') is
/// (A x C', A x C') with no reshuffling, so the inner lens is R(l.fib) as is.
Lens2Mor lift_R(const LensMor& l);
/// The coordinate map realizing (A, A) x (C', C') = (A x C', A x C') on total
/// spaces, (a, c', da, dc') in both readings. It is the identity permutation.
PolyMap lift_block_iso(std::size_t a, std::size_t c_fiber);

/// Phi o lift_R o R.
SimpleMor rdc_to_cdc(const PolyMap& f);
/// pi_B o rho(rho f) o <pi_A, 0, pi_B>, computed on plain maps.
SimpleMor rdc_to_cdc_closed(const PolyMap& f);

}  // namespace fodlab
