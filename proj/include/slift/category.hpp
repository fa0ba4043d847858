#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slift/simplicial_map.hpp"

namespace slift {

/// A finite category given by its full composition table.
class SmallCategory {
 public:
  struct Morphism {
    std::string name;
    int source;
    int target;
  };

  explicit SmallCategory(std::string name = "C") : name_(std::move(name)) {}

  int add_object(std::string name);
  /// Adds a non-identity morphism.
  int add_morphism(std::string name, int source, int target);
  /// Records g o f = h.
  void set_composite(int g, int f, int h);

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object(int c) const { return objects_.at(c); }
  const Morphism& morphism(int m) const { return morphisms_.at(m); }
  int identity(int c) const { return identities_.at(c); }
  bool is_identity(int m) const;
  /// g o f, or -1 when undefined.
  int compose(int g, int f) const;
  int find_object(const std::string& name) const;
  int find_morphism(const std::string& name) const;

  /// Lists violations of closure, associativity and unit laws.
  std::vector<std::string> validate() const;

 private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> table_;
  void grow_table();
};

/// The poset on `names` with the given order relation (reflexivity implied).
SmallCategory poset_category(const std::vector<std::string>& names, const std::function<bool(int, int)>& leq,
                             std::string name = "P");
/// [n] = {0 < 1 < ... < n}.
SmallCategory ordinal(int n);
SmallCategory discrete_category(const std::vector<std::string>& names);
/// Two objects a, b and mutually inverse arrows f : a → b, g : b → a.
SmallCategory walking_isomorphism();

/// A functor between small categories.
struct Functor {
  const SmallCategory* source = nullptr;
  const SmallCategory* target = nullptr;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;
};

/// The nerve, truncated at dim_cap. Vertices are named after objects and
/// d-simplices after their arrow chains ("f,g").
FiniteSimplicialSet nerve(const SmallCategory& c, int dim_cap = kDefaultDimCap);
SimplicialMap nerve_map(const Functor& f, const FiniteSimplicialSet& source_nerve,
                        const FiniteSimplicialSet& target_nerve);

/// A diagram of categories indexed by a base category. For a covariant
/// diagram, fibers[c] is F(c) and the functor for u : c → c' goes F(c) → F(c');
/// for a contravariant one it goes F(c') → F(c).
struct CategoryDiagram {
  bool contravariant = true;
  std::vector<SmallCategory> fibers;
  // indexed by morphisms of the base
  std::vector<std::vector<int>> on_objects;
  std::vector<std::vector<int>> on_morphisms;
};

/// A set-valued diagram, each set given by element names; maps[u][x] is the image of x.
CategoryDiagram set_diagram(bool contravariant, const std::vector<std::vector<std::string>>& sets,
                            const std::vector<std::vector<int>>& maps);

struct Grothendieck {
  SmallCategory total;
  std::vector<int> base_object;
  std::vector<int> base_morphism;

  Functor projection(const SmallCategory& base) const { return Functor{&total, &base, base_object, base_morphism}; }
};

/// Category of elements. Contravariant diagrams give a Cartesian fibration
/// (right fibration for set-valued ones); covariant ones a coCartesian
/// (left) fibration.
Grothendieck grothendieck(const SmallCategory& base, const CategoryDiagram& diagram);

}  // namespace slift
