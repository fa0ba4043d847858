#pragma once

#include <string>
#include <vector>

#include "slift/simplicial_set.hpp"

namespace slift {

/// Images of the nondegenerate simplices of a source, indexed [dim][index].
using ImageTable = std::vector<std::vector<Simplex>>;

class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(FiniteSimplicialSet source, FiniteSimplicialSet target, ImageTable images, std::string name = {});

  static SimplicialMap identity(const FiniteSimplicialSet& x);
  /// The unique map from the empty simplicial set.
  static SimplicialMap from_empty(const FiniteSimplicialSet& target);

  const FiniteSimplicialSet& source() const { return source_; }
  const FiniteSimplicialSet& target() const { return target_; }
  const std::string& name() const { return name_; }
  const ImageTable& images() const { return images_; }
  const Simplex& image(int d, int index) const { return images_.at(d).at(index); }

  /// Image of an arbitrary simplex of the source.
  Simplex operator()(const Simplex& s) const;

  SimplicialMap named(std::string name) const;
  SimplicialMap with_source(FiniteSimplicialSet s) const;
  SimplicialMap with_target(FiniteSimplicialSet t) const;

  bool operator==(const SimplicialMap& other) const;

 private:
  FiniteSimplicialSet source_;
  FiniteSimplicialSet target_;
  ImageTable images_;
  std::string name_;
};

/// g o f; throws Error unless f.target() == g.source().
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Face compatibility and dimension checks; empty iff f is a simplicial map.
std::vector<std::string> validate(const SimplicialMap& f);

/// Injective on simplices of every dimension.
bool is_mono(const SimplicialMap& f);
bool is_iso(const SimplicialMap& f);

}  // namespace slift
