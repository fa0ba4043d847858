#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "slift/cylinder.hpp"

namespace slift {

/// A commutative square p o top = bottom o i, to be filled by h : L → X.
struct LiftingSquare {
  MarkedMap i;  // K → L
  MarkedMap p;  // X → Y
  MarkedMap top;
  MarkedMap bottom;
};

LiftingSquare plain_square(const SimplicialMap& i, const SimplicialMap& p, const SimplicialMap& top,
                           const SimplicialMap& bottom);
/// Empty iff the maps fit together and the square commutes.
std::vector<std::string> check_square(const LiftingSquare& sq);

/// The first filler in search order; throws PreconditionError if the square does not commute.
std::optional<MarkedMap> find_lift(const LiftingSquare& sq);
std::size_t count_lifts(const LiftingSquare& sq, std::size_t limit = std::numeric_limits<std::size_t>::max());
/// h o i = top, p o h = bottom and h preserves markings.
bool verify_filler(const LiftingSquare& sq, const MarkedMap& h);

struct Generator {
  std::string label;
  MarkedMap map;
};

/// A finite family of monomorphisms, instantiated up to `height`.
struct GeneratorSet {
  std::string name;
  Flavor flavor = Flavor::plain;
  int height = kDefaultHeight;
  std::vector<Generator> members;
  /// Labels of members skipped because a construction overflowed its dim_cap.
  std::vector<std::string> dropped;
};

enum class HornKind { right, inner, left, kan };
const char* to_string(HornKind k);

/// Λⁿ_k → Δⁿ for n ≤ height with k in the range of the kind.
GeneratorSet horn_generators(HornKind kind, int height = kDefaultHeight);
/// ∂Δⁿ → Δⁿ for n ≤ height.
GeneratorSet boundary_generators(int height = kDefaultHeight);
/// ∂ₑ ⊠ (∂Δⁿ → Δⁿ) for n ≤ height.
GeneratorSet end_box_generators(int e, int height = kDefaultHeight);

enum class Side { right, left };

/// Level 0 is S ∪ {∂ₑ ⊠ i : i ∈ M} (e = 1 on the right, 0 on the left); each
/// further level applies ∂I ⊠ (−) to the previous one. Returns the union up to depth.
GeneratorSet anodyne_generators(const GeneratorSet& s, const GeneratorSet& m, int depth, Side side);

/// (A1): flat inner horns up to height.
GeneratorSet marked_inner_horns(int height = kDefaultHeight);
/// J♭ → J♯ for the walking isomorphism's nerve truncated at height.
GeneratorSet walking_iso_marking(int height = kDefaultHeight);
/// (Δ¹)♭ → (Δ¹)♯ and (∂Δⁿ)♭ → (Δⁿ)♭ for n < height.
GeneratorSet marked_cellular_model(int height = kDefaultHeight);

/// Names: right-anodyne, left-anodyne, marked-right, marked-left, inner-horns,
/// right-horns, left-horns, kan-horns, boundaries.
GeneratorSet preset(const std::string& name, int height = kDefaultHeight, int depth = 0);
std::vector<std::string> preset_names();

struct RlpResult {
  bool holds = true;
  std::size_t squares = 0;
  std::optional<LiftingSquare> failing;
  std::string failing_generator;
};

/// Visits every commutative square from a member of G to p, in deterministic
/// order, until the visitor returns false.
void for_each_square(const MarkedMap& p, const GeneratorSet& g,
                     const std::function<bool(const Generator&, const LiftingSquare&)>& visit);

RlpResult has_rlp(const MarkedMap& p, const GeneratorSet& g);
RlpResult has_rlp(const SimplicialMap& p, const GeneratorSet& g);
/// i against each map in `fibrations`.
RlpResult has_llp(const MarkedMap& i, const std::vector<MarkedMap>& fibrations);
RlpResult has_llp(const SimplicialMap& i, const std::vector<SimplicialMap>& fibrations);

struct Classification {
  struct Flag {
    bool holds = false;
    std::optional<LiftingSquare> witness;
    std::string generator;
  };
  int height = kDefaultHeight;
  Flag inner, left, right, kan, trivial;
};

Classification classify_fibration(const SimplicialMap& p, int height = kDefaultHeight);

/// One pushout A_k → A_{k+1} of a generator along a failing square.
struct FactorStep {
  std::string generator;
  LiftingSquare square;
  MarkedMap leg;
};

/// f = p o i with i the composite of the recorded legs.
struct Factorization {
  bool complete = false;
  int budget = 0;
  MarkedMap i;
  MarkedMap p;
  std::vector<FactorStep> steps;
};

Factorization bounded_factorize(const MarkedMap& f, const GeneratorSet& g, int budget);
Factorization bounded_factorize(const SimplicialMap& f, const GeneratorSet& g, int budget);
/// Replays every pushout step and checks f = p o i (and the RLP of p when complete).
std::vector<std::string> verify(const Factorization& fac, const MarkedMap& f, const GeneratorSet& g);

}  // namespace slift
