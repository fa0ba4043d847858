#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "slift/simplicial_map.hpp"

namespace slift {

/// Backtracking search for maps source → target.
///
/// Nondegenerate simplices of the source are assigned in ascending dimension;
/// candidates are taken from the target's simplex table (sorted by label), so
/// enumeration order, first results and counts are deterministic.
class MapSearch {
 public:
  MapSearch(FiniteSimplicialSet source, FiniteSimplicialSet target);

  /// Requires h o i = top for i : K → source and top : K → target.
  MapSearch& agree_on(const SimplicialMap& i, const SimplicialMap& top);
  /// Requires p o h = bottom for p : target → B and bottom : source → B.
  MapSearch& over(const SimplicialMap& p, const SimplicialMap& bottom);
  /// Requires marked edges (flags over nondegenerate edges) to go to marked or degenerate edges.
  MapSearch& preserve_marking(std::vector<bool> source_marked, std::vector<bool> target_marked);

  /// Calls visit for each solution until it returns false or `limit` solutions
  /// were visited; returns the number visited.
  std::size_t run(const std::function<bool(const SimplicialMap&)>& visit,
                  std::size_t limit = std::numeric_limits<std::size_t>::max()) const;
  std::optional<SimplicialMap> first() const;
  std::size_t count(std::size_t limit = std::numeric_limits<std::size_t>::max()) const;
  std::vector<SimplicialMap> all(std::size_t limit = std::numeric_limits<std::size_t>::max()) const;

 private:
  struct Pin {
    std::uint16_t word;
    Simplex value;
  };
  FiniteSimplicialSet source_, target_;
  std::vector<std::vector<std::vector<Pin>>> pins_;  // [dim][index]
  bool inconsistent_ = false;
  std::optional<SimplicialMap> base_, bottom_;
  std::vector<bool> source_marked_, target_marked_;
  bool marked_ = false;
};

/// Every map X → Y, in search order.
std::vector<SimplicialMap> hom_enumerate(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y,
                                         std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace slift
