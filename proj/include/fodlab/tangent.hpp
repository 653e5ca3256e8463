#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fodlab/lens.hpp"

namespace fodlab {

/// Bundle total -> base given by the projection onto the first `base` coordinates.
struct TrivBundle {
  std::size_t base = 0;
  std::size_t fiber = 0;

  std::size_t total() const { return base + fiber; }
  PolyMap projection() const;
  bool operator==(const TrivBundle&) const = default;
};

/// Commuting square dst.projection o total = base o src.projection.
class BundleMor {
 public:
  /// Throws DimensionError on arity mismatch, InvariantError if the square fails.
  BundleMor(TrivBundle src, TrivBundle dst, PolyMap total, PolyMap base);

  const TrivBundle& src() const { return src_; }
  const TrivBundle& dst() const { return dst_; }
  const PolyMap& total() const { return total_; }
  const PolyMap& base() const { return base_; }

  bool operator==(const BundleMor&) const = default;

 private:
  TrivBundle src_;
  TrivBundle dst_;
  PolyMap total_;
  PolyMap base_;
};

BundleMor bundle_identity(const TrivBundle& b);
BundleMor bundle_compose(const BundleMor& g, const BundleMor& f);
bool is_vertical(const BundleMor& m);

/// Fibrewise commutative monoid on a trivial bundle. plus acts on the
/// pullback (b, u, w) of the bundle with itself.
struct AdditiveBundle {
  TrivBundle bundle;
  PolyMap zero;  // B -> B + F
  PolyMap plus;  // B + F + F -> B + F
};

/// Throws InstanceError unless zero and plus are vertical and the monoid laws hold.
void validate_additive_bundle(const AdditiveBundle& b);

struct BundlePullback {
  TrivBundle bundle;
  BundleMor cartesian;
};

/// Pullback of b along g : C -> b.base; total of the cartesian map is g x id_F.
BundlePullback bundle_pullback(const PolyMap& g, const TrivBundle& b);
/// The unique k over u with cartesian o k = h, or nullopt.
std::optional<BundleMor> factor_through_pullback(const BundlePullback& pb, const BundleMor& h,
                                                 const PolyMap& u);

struct PullbackPower {
  TrivBundle bundle;
  std::vector<BundleMor> projections;
};

/// n-fold fibred power of b over its base: (B, n F).
PullbackPower pullback_power(const TrivBundle& b, std::size_t n);
/// The map induced by a bundle morphism on n-fold fibred powers.
BundleMor bundle_power_map(const BundleMor& m, std::size_t n);

/// T(A): the bundle A x A -> A with the coordinatewise fibre monoid.
AdditiveBundle tangent_section_T(std::size_t a);
/// T(f): total <f o pi_0, delta f>, base f.
BundleMor tangent_on_map(const PolyMap& f);
/// Total object of an additive bundle: tau = dom+ o T.
std::size_t dom_plus(const AdditiveBundle& b);
/// Reorders tau(B + F) = (b, x, db, dx) into (b, db, x, dx), a bundle over tau B.
PolyMap tangent_shuffle(std::size_t b, std::size_t f);

/// tau(T B x_B ... x_B T B) -> tau T B x_{tau B} ... x_{tau B} tau T B for n factors.
PolyMap pullback_power_comparison(std::size_t b, std::size_t n);

/// Span TA <- f* TB -> TB of the dual of the additive bundle fibration.
struct BundleSpan {
  BundleMor cartesian;
  BundleMor vertical;
};

BundleSpan reverse_tangent_span(const PolyMap& f);
/// Reads the span as a lens; throws InvariantError if it disagrees with reverse_section_R.
LensMor reverse_tangent_section(const PolyMap& f);

}  // namespace fodlab
