#include "doctest.h"

#include "slift/category.hpp"
#include "slift/lifting.hpp"
#include "slift/map_search.hpp"

using namespace slift;

namespace {

// All maps L → X filtered by the square's equations.
std::size_t naive_lift_count(const LiftingSquare& sq) {
  std::size_t n = 0;
  for (const auto& h : hom_enumerate(sq.i.target().underlying(), sq.p.source().underlying()))
    if (verify_filler(sq, MarkedMap(sq.i.target(), sq.p.source(), h))) ++n;
  return n;
}

}  // namespace

TEST_CASE("inner horns fill uniquely in nerves") {
  const auto x = nerve(ordinal(2));
  const auto i = horn_inclusion(2, 1);
  const auto p = to_point(x);
  std::size_t squares = 0;
  for (const auto& top : hom_enumerate(i.source(), x)) {
    const auto sq = plain_square(i, p, top, to_point(i.target()).with_target(p.target()));
    CHECK(count_lifts(sq) == 1);
    CHECK(naive_lift_count(sq) == 1);
    ++squares;
  }
  CHECK(squares > 0);
}

TEST_CASE("trivial lifting problems") {
  const auto x = horn(2, 0);
  const auto id = SimplicialMap::identity(x);
  const auto p = to_point(x);
  const auto sq = plain_square(id, p, id, p);
  auto h = find_lift(sq);
  REQUIRE(h.has_value());
  CHECK(h->underlying().images() == id.images());

  const auto pt = standard_simplex(0);
  const auto v1 = vertex_inclusion(1, 1);
  const auto sq2 = plain_square(v1, SimplicialMap::identity(pt), to_point(v1.source()).with_target(pt),
                                to_point(v1.target()).with_target(pt));
  CHECK(count_lifts(sq2) == 1);
  CHECK(find_lift(sq2)->underlying().image(1, 0).degenerate());
}

TEST_CASE("non-commuting squares are rejected") {
  const auto d1 = standard_simplex(1);
  const auto v0 = vertex_inclusion(1, 0);
  const auto id = SimplicialMap::identity(d1);
  const auto top = compose(v0, to_point(v0.source()));  // vertex 0
  const auto v1pt = *map_from_vertices(v0.source(), d1, {Simplex::nondegenerate(0, 1)});
  CHECK_THROWS_AS(find_lift(plain_square(v0, id, v1pt, id)), PreconditionError);
  CHECK(count_lifts(plain_square(v0, id, top, id)) == 1);
}

TEST_CASE("fibrancy of nerves and simplices") {
  CHECK(has_rlp(to_point(nerve(ordinal(2))), horn_generators(HornKind::inner)).holds);
  CHECK(has_rlp(to_point(nerve(walking_isomorphism(), 4)), horn_generators(HornKind::inner)).holds);
  const auto r = has_rlp(to_point(standard_simplex(1)), horn_generators(HornKind::right));
  CHECK_FALSE(r.holds);
  REQUIRE(r.failing.has_value());
  CHECK(check_square(*r.failing).empty());
  CHECK_FALSE(find_lift(*r.failing).has_value());
  const auto x = horn(2, 1);
  CHECK(has_rlp(SimplicialMap::identity(x), boundary_generators()).holds);
}

TEST_CASE("classification") {
  const auto c = classify_fibration(to_point(standard_simplex(2)));
  CHECK(c.inner.holds);
  CHECK_FALSE(c.kan.holds);
  const auto pt = classify_fibration(SimplicialMap::identity(standard_simplex(0)));
  CHECK((pt.inner.holds && pt.left.holds && pt.right.holds && pt.kan.holds && pt.trivial.holds));
  const auto two = classify_fibration(to_point(boundary(1)));
  CHECK_FALSE(two.trivial.holds);
  CHECK(two.kan.holds);
}

TEST_CASE("LLP and RLP agree") {
  const auto i = horn_inclusion(2, 1);
  for (const auto& p : {to_point(standard_simplex(1)), to_point(horn(2, 1)), to_point(nerve(ordinal(2)))}) {
    GeneratorSet single{"single", Flavor::plain, 3, {{"i", flat(i)}}, {}};
    CHECK(has_llp(i, {p}).holds == has_rlp(p, single).holds);
  }
}

TEST_CASE("right anodyne generators at depth 0") {
  const auto g = anodyne_generators(GeneratorSet{}, boundary_generators(3), 0, Side::right);
  REQUIRE(g.members.size() == 4);
  for (int n = 0; n <= 3; ++n) {
    const auto direct = box_end(boundary_inclusion(n, 4), 1);
    CHECK(g.members[n].map.underlying().images() == direct.comparison.underlying().images());
    CHECK(is_mono(g.members[n].map.underlying()));
  }
  const auto deeper = anodyne_generators(GeneratorSet{}, boundary_generators(2), 1, Side::right);
  const auto shallow = anodyne_generators(GeneratorSet{}, boundary_generators(2), 0, Side::right);
  for (std::size_t k = 0; k < shallow.members.size(); ++k) CHECK(deeper.members[k].map == shallow.members[k].map);
  CHECK(deeper.members.size() > shallow.members.size());
}

TEST_CASE("marked right generators contain the box classes") {
  const auto g = preset("marked-right", 3);
  const Generator* b1 = nullptr;
  int b2 = 0;
  for (const auto& m : g.members) {
    if (m.label == "box1(mark(1))") b1 = &m;
    if (m.label.rfind("box1(boundary(", 0) == 0) ++b2;
  }
  REQUIRE(b1 != nullptr);
  // (Δ¹)♯ × (Δ¹)♯ has every edge marked.
  CHECK(b1->map.target().marked_count() == b1->map.target().underlying().count(1));
  CHECK(b2 == 3);
  for (const auto& m : g.members) CHECK(is_mono(m.map.underlying()));
}

TEST_CASE("bounded factorization") {
  const auto f = flat(horn_inclusion(2, 1));
  const auto g = horn_generators(HornKind::inner, 2);
  const auto fac = bounded_factorize(f, g, 3);
  CHECK(fac.complete);
  CHECK(fac.steps.size() == 1);
  CHECK(is_iso(fac.p.underlying()));
  CHECK(verify(fac, f, g).empty());

  const auto already = bounded_factorize(to_point(nerve(ordinal(2))), g, 2);
  CHECK(already.complete);
  CHECK(already.steps.empty());

  const auto v1 = vertex_inclusion(1, 1);
  const auto ra = preset("right-anodyne", 1);
  const auto fac2 = bounded_factorize(v1, ra, 10);
  CHECK(fac2.complete);
  CHECK(fac2.steps.size() == 1);
  CHECK(is_iso(fac2.p.underlying()));
  CHECK(verify(fac2, flat(v1), ra).empty());
}
