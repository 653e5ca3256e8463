#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "fodlab/polymap.hpp"

namespace fodlab {

/// Object (fiber over base) of the simple fibration.
struct SimpleObj {
  std::size_t base = 0;
  std::size_t fiber = 0;

  std::size_t total() const { return base + fiber; }
  bool operator==(const SimpleObj&) const = default;
};

/// Morphism of S(B): a base map A -> B and a fiber map A x A' -> B'.
/// The fiber variables are the trailing src.fiber coordinates of fib's domain.
class SimpleMor {
 public:
  /// Throws DimensionError when the arity discipline is violated.
  SimpleMor(SimpleObj src, SimpleObj dst, PolyMap base, PolyMap fib);

  const SimpleObj& src() const { return src_; }
  const SimpleObj& dst() const { return dst_; }
  const PolyMap& base() const { return base_; }
  const PolyMap& fib() const { return fib_; }

  bool operator==(const SimpleMor&) const = default;

 private:
  SimpleObj src_;
  SimpleObj dst_;
  PolyMap base_;
  PolyMap fib_;
};

enum class MorphismKind { cartesian, vertical, neither, both };

const char* to_string(MorphismKind kind);

SimpleMor simple_identity(const SimpleObj& x);
/// g after f: base g.base o f.base, fiber g.fib o (f.base x f.fib) o (diag x id).
SimpleMor simple_compose(const SimpleMor& g, const SimpleMor& f);
SimpleMor simple_add(const SimpleMor& f, const SimpleMor& g);
SimpleMor simple_zero(const SimpleObj& x, const SimpleObj& y);

MorphismKind classify(const SimpleMor& m);
bool is_cartesian(const SimpleMor& m);
bool is_vertical(const SimpleMor& m);

struct Factorization {
  SimpleMor vertical;
  SimpleMor cartesian;
};

/// m = cartesian o vertical, through the reindexed object (dst.fiber over src.base).
Factorization vertical_cartesian_factor(const SimpleMor& m);

struct Reindexing {
  SimpleObj object;
  SimpleMor lift;
};

/// Reindexes obj along f : A -> obj.base; the lift is (f, fiber projection).
Reindexing reindex(const PolyMap& f, const SimpleObj& obj);

/// Given a cartesian `cart` over f and h with h.base = f o u, returns the unique
/// k over u with cart o k = h, or nullopt if no such k exists.
std::optional<SimpleMor> factor_through_cartesian(const SimpleMor& cart, const SimpleMor& h,
                                                  const PolyMap& u);

struct SimpleProduct {
  SimpleObj object;
  SimpleMor first;
  SimpleMor second;
};

/// (A', A) x (B', B) = (A' x B', A x B), computed pointwise.
SimpleProduct simple_product(const SimpleObj& x, const SimpleObj& y);
SimpleMor simple_pair(const SimpleMor& f, const SimpleMor& g);
/// f x g between product objects.
SimpleMor simple_product_map(const SimpleMor& f, const SimpleMor& g);
/// Fibred product over a shared base: fibers add. Throws DimensionError on base mismatch.
SimpleObj fibred_product(const SimpleObj& x, const SimpleObj& y);

/// fib additive in its fiber argument, checked as exact identities.
bool is_cla_morphism(const SimpleMor& m);

/// The stationary forward-derivative section: f |-> (f, delta f) between (A,A) and (B,B).
SimpleMor forward_section_D(const PolyMap& f);

// Additive simple fibration S+(B).

/// Commutative monoid in the fibre over `base`: zero : B -> B', plus : B x B' x B' -> B'.
struct MonoidInFibre {
  std::size_t base = 0;
  std::size_t fiber = 0;
  PolyMap zero;
  PolyMap plus;
};

/// Coordinatewise monoid on (fiber over base).
MonoidInFibre standard_fibre_monoid(std::size_t base, std::size_t fiber);
/// Throws InstanceError unless unit, commutativity and associativity hold exactly.
void validate_monoid(const MonoidInFibre& m);

struct SPlusMor {
  SimpleMor mor;
  MonoidInFibre src_monoid;
  MonoidInFibre dst_monoid;
};

/// f'_2 = <f o pi0, f' o <pi0, pi1>, f' o <pi0, pi2>> : A x A' x A' -> B x B' x B'.
PolyMap fibre_doubling(const SimpleMor& m);
/// fib preserves the fibre monoids: f' o <id, 0^A> = 0^B o f and f' o +^A = +^B o f'_2.
bool splus_check(const SPlusMor& m);

}  // namespace fodlab
