#include "doctest.h"

#include "slift/category.hpp"
#include "slift/constructions.hpp"
#include "slift/map_search.hpp"

using namespace slift;

namespace {

std::vector<int> counts(const FiniteSimplicialSet& x) {
  std::vector<int> out;
  for (int d = 0; d <= x.dim(); ++d) out.push_back(x.count(d));
  return out;
}

// Chains of d composable non-identity arrows, counted straight from the table.
int identity_free_chains(const SmallCategory& c, int d) {
  std::function<int(int, int)> from = [&](int object, int left) {
    if (left == 0) return 1;
    int total = 0;
    for (int m = 0; m < c.morphism_count(); ++m)
      if (!c.is_identity(m) && c.morphism(m).source == object) total += from(c.morphism(m).target, left - 1);
    return total;
  };
  int total = 0;
  for (int o = 0; o < c.object_count(); ++o) total += from(o, d);
  return total;
}

}  // namespace

TEST_CASE("small categories validate") {
  CHECK(ordinal(3).validate().empty());
  CHECK(walking_isomorphism().validate().empty());
  CHECK(discrete_category({"a", "b"}).validate().empty());
}

TEST_CASE("nerves") {
  const auto arrow = nerve(ordinal(1));
  CHECK(counts(arrow) == counts(standard_simplex(1)));
  CHECK(validate(arrow).empty());
  CHECK(counts(nerve(discrete_category({"a", "b"}))) == std::vector<int>{2});

  const auto j = walking_isomorphism();
  const auto nj = nerve(j, 3);
  CHECK(validate(nj).empty());
  std::vector<int> expected;
  for (int d = 0; d <= 3; ++d) expected.push_back(d == 0 ? 2 : identity_free_chains(j, d));
  CHECK(counts(nj) == expected);
  CHECK(counts(nj) == std::vector<int>{2, 2, 2, 2});

  const auto n3 = nerve(ordinal(3));
  CHECK(counts(n3) == counts(standard_simplex(3)));
  CHECK(validate(n3).empty());
  // A composite face of f,g is degenerate when g o f is an identity.
  const auto fg = *nj.find("f,g");
  CHECK(nj.face(fg, 1).degenerate());
}

TEST_CASE("nerve of the ordinal is isomorphic to the simplex") {
  const auto n2 = nerve(ordinal(2));
  const auto d2 = standard_simplex(2);
  std::size_t isos = 0;
  for (const auto& f : hom_enumerate(n2, d2)) isos += is_iso(f) ? 1 : 0;
  CHECK(isos == 1);
}

TEST_CASE("Grothendieck construction of a set-valued functor") {
  const auto base = ordinal(1);
  // Contravariant F on [1]: F(1) = {p, q} → F(0) = {x}.
  const auto diagram = set_diagram(true, {{"x"}, {"p", "q"}}, {{}, {}, {0, 0}});
  const auto el = grothendieck(base, diagram);
  CHECK(el.total.validate().empty());
  CHECK(el.total.object_count() == 3);
  CHECK(el.total.morphism_count() == 5);
  const auto ne = nerve(el.total);
  const auto nb = nerve(base);
  const auto proj = nerve_map(el.projection(base), ne, nb);
  CHECK(validate(proj).empty());
}

TEST_CASE("Grothendieck construction of a category-valued functor") {
  const auto base = ordinal(1);
  CategoryDiagram diagram;
  diagram.contravariant = true;
  diagram.fibers = {ordinal(1), discrete_category({"y"})};
  // the functor F(1) → F(0) picks out the object 1
  diagram.on_objects = {{}, {}, {1}};
  diagram.on_morphisms = {{}, {}, {1}};
  const auto el = grothendieck(base, diagram);
  CHECK(el.total.validate().empty());
  const auto ne = nerve(el.total);
  CHECK(validate(ne).empty());
  CHECK(validate(nerve_map(el.projection(base), ne, nerve(base))).empty());
}
