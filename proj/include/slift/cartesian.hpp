#pragma once

#include <map>

#include "slift/lifting.hpp"

namespace slift {

/// c2: final-vertex horn squares through the edge. c3: end-box squares with
/// the edge Δ¹ × {n}. cross: both, required to agree.
enum class CartesianMethod { c2, c3, cross };
const char* to_string(CartesianMethod m);
CartesianMethod cartesian_method_from(const std::string& s);

struct EdgeVerdict {
  Simplex edge;
  std::string label;
  bool is_cartesian = false;
  CartesianMethod method = CartesianMethod::c2;
  /// For cross: whether c2 and c3 agreed; always true otherwise.
  bool agreement = true;
  bool c2 = false;
  bool c3 = false;
  std::size_t squares = 0;
  std::optional<LiftingSquare> witness;  // a square without a filler
};

/// Throws PreconditionError unless p is an inner fibration at the given height.
void require_inner(const SimplicialMap& p, int height);

/// `edge` is any 1-simplex of p's source (degenerate ones included). Set
/// `inner_checked` to skip the inner fibration precondition check.
EdgeVerdict is_p_cartesian(const SimplicialMap& p, const Simplex& edge, CartesianMethod method,
                           int height = kDefaultHeight, bool inner_checked = false);

/// Verdicts for every nondegenerate edge of the source of p.
std::vector<EdgeVerdict> cartesian_edges(const SimplicialMap& p, CartesianMethod method,
                                         int height = kDefaultHeight);

/// X♮: the source of p with exactly its p-Cartesian edges marked.
MarkedSimplicialSet natural_marking(const SimplicialMap& p, int height = kDefaultHeight);

struct CartesianFibrationVerdict {
  bool holds = false;
  bool inner = false;
  /// (edge of A, vertex of X over its target) → chosen p-Cartesian lift
  std::vector<std::pair<std::pair<Simplex, Simplex>, Simplex>> lifts;
  std::string failure;
};

CartesianFibrationVerdict is_cartesian_fibration(const SimplicialMap& p, int height = kDefaultHeight);

/// Edges of an ∞-category modulo homotopy rel endpoints, with composition
/// read off from all 2-simplices.
class HomotopyCategory {
 public:
  HomotopyCategory(const FiniteSimplicialSet& x, int height = kDefaultHeight);

  const FiniteSimplicialSet& object() const { return x_; }
  int class_count() const { return static_cast<int>(reps_.size()); }
  int class_of(const Simplex& edge) const;
  const Simplex& representative(int cls) const { return reps_.at(cls); }
  int source(int cls) const { return source_.at(cls); }
  int target(int cls) const { return target_.at(cls); }
  int identity(int vertex) const { return identity_.at(vertex); }
  /// g o f, or -1 when not composable.
  int compose(int g, int f) const;
  bool is_isomorphism(int cls) const;

 private:
  FiniteSimplicialSet x_;
  std::vector<int> edge_class_;  // over x.simplices(1)
  std::vector<Simplex> reps_;
  std::vector<int> source_, target_, identity_;
  std::map<std::pair<int, int>, int> composition_;
};

/// Throws PreconditionError when the height is below 3 or X is not an ∞-category there.
bool is_equivalence(const HomotopyCategory& hc, const Simplex& edge);

enum class RfibMethod { generators, characterization, cross };
const char* to_string(RfibMethod m);
RfibMethod rfib_method_from(const std::string& s);

struct MarkedRfibVerdict {
  bool holds = false;
  RfibMethod method = RfibMethod::cross;
  bool agreement = true;
  std::optional<bool> by_generators;
  std::optional<bool> by_characterization;
  /// The walking-isomorphism marking stands in for the J♭ → J♯ generator.
  bool walking_iso_surrogate = true;
  std::string reason;
  std::optional<LiftingSquare> witness;
};

MarkedRfibVerdict is_marked_right_fibration(const MarkedMap& q, RfibMethod method, int height = kDefaultHeight);

}  // namespace slift
