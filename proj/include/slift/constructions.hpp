#pragma once

#include <functional>
#include <unordered_map>

#include "slift/simplicial_map.hpp"

namespace slift {

FiniteSimplicialSet empty_set(int dim_cap = kDefaultDimCap);
FiniteSimplicialSet standard_simplex(int n, int dim_cap = kDefaultDimCap);
/// ∂Δⁿ → Δⁿ; the source is the boundary.
SimplicialMap boundary_inclusion(int n, int dim_cap = kDefaultDimCap);
/// Λⁿ_k → Δⁿ; the source is the horn.
SimplicialMap horn_inclusion(int n, int k, int dim_cap = kDefaultDimCap);
FiniteSimplicialSet boundary(int n, int dim_cap = kDefaultDimCap);
FiniteSimplicialSet horn(int n, int k, int dim_cap = kDefaultDimCap);
/// The vertex {v} → Δⁿ.
SimplicialMap vertex_inclusion(int n, int v, int dim_cap = kDefaultDimCap);
/// The unique map to Δ⁰.
SimplicialMap to_point(const FiniteSimplicialSet& x);
/// The map Δⁿ → X classifying the simplex s.
SimplicialMap classifying_map(const FiniteSimplicialSet& x, const Simplex& s);

/// The simplicial subset spanned by the nondegenerate simplices for which
/// keep(dim, index) holds; throws Error if the selection is not closed under faces.
SimplicialMap subobject(const FiniteSimplicialSet& x, const std::function<bool(int, int)>& keep,
                        std::string name = {});

/// Image of f as a simplicial subset of its target.
SimplicialMap image_inclusion(const SimplicialMap& f, std::string name = {});

/// X ×_A B with both projections.
class Pullback {
 public:
  Pullback(const SimplicialMap& p, const SimplicialMap& u, std::string name = {});

  const FiniteSimplicialSet& object() const { return object_; }
  const SimplicialMap& first() const { return first_; }
  const SimplicialMap& second() const { return second_; }

  /// The simplex (x, b) of the pullback in normal form.
  Simplex pair(const Simplex& x, const Simplex& b) const;
  /// The map Z → X ×_A B induced by f : Z → X and g : Z → B.
  SimplicialMap induce(const SimplicialMap& f, const SimplicialMap& g) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };
  FiniteSimplicialSet object_;
  SimplicialMap first_;
  SimplicialMap second_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Simplex, PairHash> lookup_;
};

/// X × Y as the pullback over Δ⁰.
Pullback product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, std::string name = {});

/// f × g : X × Y → X' × Y', landing in `into`.
SimplicialMap product_map(const Pullback& from, const Pullback& into, const SimplicialMap& f, const SimplicialMap& g);

/// Pushout of X ← K → Y computed levelwise. Identifiers of Y are kept; those
/// of X are kept unless they collide, in which case a prime is appended.
class Pushout {
 public:
  Pushout(const SimplicialMap& f, const SimplicialMap& g, std::string name = {});

  const FiniteSimplicialSet& object() const { return object_; }
  /// X → P
  const SimplicialMap& first() const { return first_; }
  /// Y → P
  const SimplicialMap& second() const { return second_; }

  /// P → Z induced by a : X → Z and b : Y → Z (assumed to agree on K).
  SimplicialMap induce(const SimplicialMap& a, const SimplicialMap& b) const;

 private:
  struct Rep {
    bool from_first;
    Simplex simplex;
  };
  FiniteSimplicialSet object_;
  SimplicialMap first_;
  SimplicialMap second_;
  std::vector<std::vector<Rep>> reps_;
};

Pushout coproduct(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, std::string name = {});

/// Builds the map src → tgt determined by a vertex assignment, when one exists.
std::optional<SimplicialMap> map_from_vertices(const FiniteSimplicialSet& src, const FiniteSimplicialSet& tgt,
                                               const std::vector<Simplex>& vertex_images);

}  // namespace slift
