#pragma once

#include <memory>

#include "slift/marked.hpp"

namespace slift {

/// plain: Δ¹ × X. marked: (Δ¹)♯ × M. Plain objects are handled as flat-marked
/// ones throughout, which is why both flavors share one representation.
enum class Flavor { plain, marked };

const char* to_string(Flavor f);

class Cylinder {
 public:
  Cylinder(const MarkedSimplicialSet& x, Flavor flavor);

  Flavor flavor() const { return flavor_; }
  const MarkedSimplicialSet& base() const { return base_; }
  const MarkedSimplicialSet& object() const { return product_->object(); }
  /// ∂₀, ∂₁ : X → IX.
  const MarkedMap& end(int e) const { return ends_[e]; }
  /// σ : IX → X.
  const MarkedMap& collapse() const { return product_->second(); }
  /// IX → I, the segment coordinate.
  const MarkedMap& coordinate() const { return product_->first(); }
  const MarkedPullback& product() const { return *product_; }

  /// The simplex (t, x) of IX for a segment simplex t and a simplex x of X.
  Simplex pair(const Simplex& t, const Simplex& x) const { return product_->plain().pair(t, x); }

 private:
  Flavor flavor_;
  MarkedSimplicialSet base_;
  std::shared_ptr<MarkedPullback> product_;
  MarkedMap ends_[2];
};

/// The segment I itself: Δ¹ (flat) or (Δ¹)♯.
MarkedSimplicialSet segment(Flavor flavor, int dim_cap = kDefaultDimCap);

Cylinder cylinder_on(const FiniteSimplicialSet& x);
Cylinder cylinder_on(const MarkedSimplicialSet& m, Flavor flavor = Flavor::marked);

/// I ⊗ f : IX → IY.
MarkedMap cylinder_map(const Cylinder& from, const Cylinder& to, const MarkedMap& f);

struct BoxProductResult {
  MarkedSimplicialSet corner;
  /// corner → I ⊗ L
  MarkedMap comparison;
  /// The legs of the corner pushout: from the L-side object and from I ⊗ K.
  MarkedMap from_ends;
  MarkedMap from_cylinder;
  std::vector<std::string> trace;
};

/// ∂I ⊠ i : (∂I ⊗ L) ⊔ (I ⊗ K) → I ⊗ L.
BoxProductResult box_boundary(const MarkedMap& i, Flavor flavor = Flavor::marked);
BoxProductResult box_boundary(const SimplicialMap& i);
/// ∂ₑ ⊠ i : ({e} ⊗ L) ⊔ (I ⊗ K) → I ⊗ L.
BoxProductResult box_end(const MarkedMap& i, int e, Flavor flavor = Flavor::marked);
BoxProductResult box_end(const SimplicialMap& i, int e);

/// For each mono j, checks that ∂I ⊠ j, ∂₀ ⊠ j and ∂₁ ⊠ j are mono; lists failures.
std::vector<std::string> exactness_audit(const std::vector<MarkedMap>& monos, Flavor flavor);

}  // namespace slift
