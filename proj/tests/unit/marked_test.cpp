#include "doctest.h"

#include "slift/map_search.hpp"
#include "slift/marked.hpp"

using namespace slift;

TEST_CASE("flat and sharp") {
  const auto d1 = standard_simplex(1);
  CHECK(flat(d1).marked_count() == 0);
  CHECK(sharp(d1).marked_count() == 1);
  const auto d0 = standard_simplex(0);
  CHECK(flat(d0).is_marked(degeneracy(Simplex::nondegenerate(0, 0), 0)));
  CHECK(flat(d1).underlying() == d1);
  CHECK(validate(MarkedMap(flat(d1), sharp(d1), SimplicialMap::identity(d1))).empty());
  CHECK_FALSE(validate(MarkedMap(sharp(d1), flat(d1), SimplicialMap::identity(d1))).empty());
}

TEST_CASE("mu") {
  const auto d1 = standard_simplex(1);
  CHECK(mu(flat(d1)).source().dim() == 0);
  CHECK(mu(flat(d1)).source().count(0) == 2);
  const auto d2 = standard_simplex(2);
  CHECK(is_iso(mu(sharp(d2))));
  std::vector<bool> marks(3, false);
  marks[d2.index_of(*d2.find("01"))] = true;
  const auto spanned = mu(MarkedSimplicialSet(d2, marks)).source();
  // Δ¹ ⊔ Δ⁰: the edge 01 and the lone vertex 2.
  CHECK(spanned.count(0) == 3);
  CHECK(spanned.dim() == 1);
  CHECK(spanned.count(1) == 1);
  CHECK(spanned.cell(1, 0).id == "01");
}

TEST_CASE("maps from sharp correspond to maps into mu") {
  const auto d2 = standard_simplex(2);
  std::vector<bool> marks(3, false);
  marks[d2.index_of(*d2.find("01"))] = true;
  marks[d2.index_of(*d2.find("12"))] = true;
  const MarkedSimplicialSet m(d2, marks);
  const auto a = standard_simplex(1);
  std::size_t marked_maps = 0;
  for (const auto& f : hom_enumerate(a, d2))
    if (validate(MarkedMap(sharp(a), m, f)).empty()) ++marked_maps;
  CHECK(marked_maps == hom_enumerate(a, mu(m).source()).size());
}

TEST_CASE("marked product marks pairwise-marked edges") {
  const auto d1 = standard_simplex(1);
  const auto prod = marked_product(sharp(d1), flat(d1));
  const auto& x = prod.object().underlying();
  int expected = 0;
  for (int k = 0; k < x.count(1); ++k) {
    const bool second_degenerate = prod.second().underlying().image(1, k).degenerate();
    CHECK(prod.object().marks()[k] == second_degenerate);
    expected += second_degenerate ? 1 : 0;
  }
  CHECK(expected == 2);
  CHECK(prod.object().marked_count() == expected);
}

TEST_CASE("marked pushout has the plain pushout underneath") {
  const auto incl = boundary_inclusion(1);
  const auto collapse = to_point(incl.source());
  MarkedPushout mp(sharp(incl), flat(collapse));
  Pushout po(incl, collapse);
  CHECK(mp.object().underlying() == po.object());
  CHECK(mp.object().marked_count() == 1);
  const auto c = marked_coproduct(sharp(standard_simplex(1)), flat(standard_simplex(1)));
  CHECK(c.object().marked_count() == 1);
}
