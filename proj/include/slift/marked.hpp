#pragma once

#include "slift/constructions.hpp"

namespace slift {

/// A simplicial set with a set of marked edges. Degenerate edges are always
/// marked; `marks` flags the nondegenerate edges.
class MarkedSimplicialSet {
 public:
  MarkedSimplicialSet() = default;
  MarkedSimplicialSet(FiniteSimplicialSet underlying, std::vector<bool> marks);

  const FiniteSimplicialSet& underlying() const { return underlying_; }
  const std::vector<bool>& marks() const { return marks_; }
  /// Any 1-simplex, degenerate or not.
  bool is_marked(const Simplex& edge) const;
  int marked_count() const;
  MarkedSimplicialSet renamed(std::string name) const { return {underlying_.renamed(std::move(name)), marks_}; }

  bool operator==(const MarkedSimplicialSet& other) const = default;

 private:
  FiniteSimplicialSet underlying_;
  std::vector<bool> marks_;
};

class MarkedMap {
 public:
  MarkedMap() = default;
  MarkedMap(MarkedSimplicialSet source, MarkedSimplicialSet target, SimplicialMap underlying);

  const MarkedSimplicialSet& source() const { return source_; }
  const MarkedSimplicialSet& target() const { return target_; }
  const SimplicialMap& underlying() const { return underlying_; }

  bool operator==(const MarkedMap& other) const = default;

 private:
  MarkedSimplicialSet source_;
  MarkedSimplicialSet target_;
  SimplicialMap underlying_;
};

MarkedMap compose(const MarkedMap& g, const MarkedMap& f);
/// Underlying validation plus marking preservation.
std::vector<std::string> validate(const MarkedMap& f);
MarkedMap identity(const MarkedSimplicialSet& m);

MarkedSimplicialSet flat(const FiniteSimplicialSet& x);
MarkedSimplicialSet sharp(const FiniteSimplicialSet& x);
MarkedMap flat(const SimplicialMap& f);
MarkedMap sharp(const SimplicialMap& f);
/// The largest simplicial subset all of whose edges are marked, with its inclusion.
SimplicialMap mu(const MarkedSimplicialSet& m);

class MarkedPullback {
 public:
  MarkedPullback(const MarkedMap& p, const MarkedMap& u, std::string name = {});

  const MarkedSimplicialSet& object() const { return object_; }
  const MarkedMap& first() const { return first_; }
  const MarkedMap& second() const { return second_; }
  const Pullback& plain() const { return plain_; }
  MarkedMap induce(const MarkedMap& f, const MarkedMap& g) const;

 private:
  Pullback plain_;
  MarkedSimplicialSet object_;
  MarkedMap first_, second_;
};

MarkedPullback marked_product(const MarkedSimplicialSet& m, const MarkedSimplicialSet& n, std::string name = {});

class MarkedPushout {
 public:
  MarkedPushout(const MarkedMap& f, const MarkedMap& g, std::string name = {});

  const MarkedSimplicialSet& object() const { return object_; }
  const MarkedMap& first() const { return first_; }
  const MarkedMap& second() const { return second_; }
  const Pushout& plain() const { return plain_; }
  MarkedMap induce(const MarkedMap& a, const MarkedMap& b) const;

 private:
  Pushout plain_;
  MarkedSimplicialSet object_;
  MarkedMap first_, second_;
};

MarkedPushout marked_coproduct(const MarkedSimplicialSet& m, const MarkedSimplicialSet& n, std::string name = {});

/// Marks each nondegenerate edge of the source of p flagged in `cartesian_edges`.
MarkedSimplicialSet natural_marking(const SimplicialMap& p, const std::vector<bool>& cartesian_edges);

/// The image marking: edges that are images of marked edges of f's source.
std::vector<bool> image_marks(const MarkedSimplicialSet& source, const SimplicialMap& f);

}  // namespace slift
