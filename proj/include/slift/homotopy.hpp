#pragma once

#include <map>

#include "slift/cartesian.hpp"

namespace slift {

/// h : I ⊗ X → W with h∂₀ = f and h∂₁ = g, if one exists. Marked maps use the
/// marked cylinder unless `flavor` says otherwise.
std::optional<MarkedMap> i_homotopy(const MarkedMap& f, const MarkedMap& g, Flavor flavor = Flavor::marked);
std::optional<SimplicialMap> i_homotopy(const SimplicialMap& f, const SimplicialMap& g);

/// Hom(X, W) partitioned into I-homotopy classes.
struct HomotopyClassTable {
  Flavor flavor = Flavor::plain;
  MarkedSimplicialSet x, w;
  std::vector<MarkedMap> maps;
  /// One entry per related ordered pair (h∂₀, h∂₁), with the first homotopy found.
  struct Pair {
    int from = 0;
    int to = 0;
    MarkedMap homotopy;
  };
  std::vector<Pair> generating;
  std::vector<int> class_of;  // over maps
  int class_count = 0;
  /// The generated relation is reflexive, symmetric and transitive as it stands.
  bool relation_closed = false;

  /// Index of f in `maps`, or -1.
  int index_of(const SimplicialMap& f) const;
};

HomotopyClassTable homotopy_classes(const MarkedSimplicialSet& x, const MarkedSimplicialSet& w,
                                    Flavor flavor = Flavor::marked);
HomotopyClassTable homotopy_classes(const FiniteSimplicialSet& x, const FiniteSimplicialSet& w);
/// Re-checks every generating pair and the partition.
std::vector<std::string> verify(const HomotopyClassTable& t);

enum class RetractDirection { right, left, dual_right, dual_left };
const char* to_string(RetractDirection d);
RetractDirection retract_direction_from(const std::string& s);

/// i : A → X, r : X → A and h : I ⊗ X → X with r i = id and
///   right:      h∂₀ = id, h∂₁ = i r, h (I ⊗ i) = i σ
///   left:       h∂₀ = i r, h∂₁ = id, h (I ⊗ i) = i σ
///   dual_right: h∂₀ = id, h∂₁ = i r, r h = r σ
///   dual_left:  h∂₀ = i r, h∂₁ = id, r h = r σ
struct DeformationRetractCertificate {
  RetractDirection direction = RetractDirection::right;
  Flavor flavor = Flavor::plain;
  MarkedMap i, r, h;
};

std::vector<std::string> verify(const DeformationRetractCertificate& c);

/// For right/left, `m` is the inclusion i and the search runs over retractions r
/// and homotopies; for the dual directions `m` is r and the search runs over
/// sections i and homotopies. Exhaustive; the first certificate in search order.
std::optional<DeformationRetractCertificate> find_deformation_retract(const MarkedMap& m, RetractDirection direction,
                                                                      Flavor flavor = Flavor::marked);
std::optional<DeformationRetractCertificate> find_deformation_retract(const SimplicialMap& m,
                                                                      RetractDirection direction);

/// contra: W is fibrant when W → Δ⁰ is a right fibration (marked: marked right
/// fibration). co: the left-hand versions.
enum class WeqSide { contra, co };
const char* to_string(WeqSide s);
WeqSide weq_side_from(const std::string& s);

bool is_fibrant(const MarkedSimplicialSet& w, WeqSide side, Flavor flavor, int height = kDefaultHeight);

struct CorpusWeqVerdict {
  struct PerObject {
    std::string w;
    int target_classes = 0;  // |[B, W]|
    int source_classes = 0;  // |[A, W]|
    bool injective = false;
    bool surjective = false;
    bool bijective() const { return injective && surjective; }
  };
  std::vector<PerObject> per_object;
  /// f* is bijective for every member of the corpus. This is relative to the
  /// corpus and is not a weak equivalence verdict.
  bool bijective_for_corpus = true;
};

/// Throws PreconditionError when a corpus member is not fibrant.
CorpusWeqVerdict corpus_weak_equivalence(const MarkedMap& f, WeqSide side, const std::vector<MarkedSimplicialSet>& corpus,
                                         Flavor flavor = Flavor::marked, int height = kDefaultHeight);
CorpusWeqVerdict corpus_weak_equivalence(const SimplicialMap& f, WeqSide side,
                                         const std::vector<FiniteSimplicialSet>& corpus, int height = kDefaultHeight);

/// f = p i with i right anodyne (a factorization trace) and p a trivial fibration.
struct FinalityResult {
  bool certified = false;
  Factorization factorization;
  RlpResult residual;  // p against boundary inclusions
  /// "certified", or why the search was inconclusive.
  std::string status;
};

FinalityResult certify_final(const SimplicialMap& f, int budget, int height = kDefaultHeight);
/// Replays the factorization and the residual check.
std::vector<std::string> verify(const FinalityResult& r, const SimplicialMap& f, int height = kDefaultHeight);

/// Pullback j : A → X of i : B → Y along p : X → Y, with a right deformation
/// retract certificate for j obtained by lifting against p, and the LLP of j
/// against the given right fibrations.
struct PropernessReport {
  MarkedMap j;
  DeformationRetractCertificate base;  // for i
  std::optional<LiftingSquare> square;  // the lifting problem against p
  std::optional<DeformationRetractCertificate> certificate;  // for j
  std::vector<std::string> certificate_errors;
  RlpResult llp;
  bool holds = false;
  std::string failure;
};

/// Throws PreconditionError unless p is a (marked) left fibration and i a right
/// deformation retract.
PropernessReport properness_experiment(const MarkedMap& i, const MarkedMap& p, Flavor flavor,
                                       const std::vector<MarkedMap>& right_fibrations, int height = kDefaultHeight);
PropernessReport properness_experiment(const SimplicialMap& i, const SimplicialMap& p,
                                       const std::vector<SimplicialMap>& right_fibrations, int height = kDefaultHeight);

}  // namespace slift
