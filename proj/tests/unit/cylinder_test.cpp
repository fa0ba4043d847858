#include "doctest.h"

#include "slift/cylinder.hpp"

using namespace slift;

namespace {

std::vector<int> counts(const FiniteSimplicialSet& x, int top) {
  std::vector<int> out;
  for (int d = 0; d <= top; ++d) out.push_back(d <= x.dim() ? x.count(d) : 0);
  return out;
}

// Corner of a box product of a mono i: A ⊔_C B with C = A ∩ B inside I ⊗ L,
// counted by inclusion-exclusion.
std::vector<int> union_counts(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b,
                              const FiniteSimplicialSet& c, int top) {
  auto ca = counts(a, top), cb = counts(b, top), cc = counts(c, top);
  std::vector<int> out;
  for (int d = 0; d <= top; ++d) out.push_back(ca[d] + cb[d] - cc[d]);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<int> counts(const FiniteSimplicialSet& x) { return counts(x, x.dim()); }


}  // namespace

TEST_CASE("cylinder structure maps") {
  for (const auto& x : {standard_simplex(0), standard_simplex(1), horn(2, 1), boundary(2)}) {
    const auto c = cylinder_on(x);
    CHECK(validate(c.object().underlying()).empty());
    for (int e = 0; e < 2; ++e) {
      CHECK(validate(c.end(e)).empty());
      CHECK(compose(c.collapse(), c.end(e)).underlying() == SimplicialMap::identity(x));
    }
    const auto both = coproduct(x, x);
    CHECK(is_mono(both.induce(c.end(0).underlying(), c.end(1).underlying())));
  }
  CHECK(counts(cylinder_on(standard_simplex(0)).object().underlying()) == std::vector<int>{2, 1});
  CHECK(counts(cylinder_on(standard_simplex(1)).object().underlying()) == std::vector<int>{4, 5, 2});
  CHECK_THROWS_AS(cylinder_on(standard_simplex(4)), DimCapOverflow);
}

TEST_CASE("marked cylinder on a flat edge") {
  const auto c = cylinder_on(flat(standard_simplex(1)), Flavor::marked);
  const auto& x = c.object().underlying();
  int vertical = 0;
  for (int k = 0; k < x.count(1); ++k) {
    const bool expected = c.collapse().underlying().image(1, k).degenerate();
    CHECK(c.object().marks()[k] == expected);
    vertical += expected ? 1 : 0;
  }
  CHECK(vertical == 2);
  CHECK(validate(c.end(1)).empty());
}

TEST_CASE("boundary box of the empty inclusion into a point") {
  const auto r = box_boundary(SimplicialMap::from_empty(standard_simplex(0)));
  CHECK(counts(r.corner.underlying()) == std::vector<int>{2});
  CHECK(counts(r.comparison.target().underlying()) == std::vector<int>{2, 1});
  CHECK(is_mono(r.comparison.underlying()));
}

TEST_CASE("box corners match inclusion-exclusion") {
  for (int n = 1; n <= 3; ++n) {
    const auto i = boundary_inclusion(n);
    const auto& k = i.source();
    const auto& l = i.target();
    const auto ik = product(standard_simplex(1), k).object();
    const auto r = box_boundary(i);
    CHECK(is_mono(r.comparison.underlying()));
    CHECK(validate(r.comparison).empty());
    const auto ends_l = coproduct(l, l).object();
    const auto ends_k = coproduct(k, k).object();
    CHECK(counts(r.corner.underlying()) == union_counts(ends_l, ik, ends_k, n + 1));
    for (int e = 0; e < 2; ++e) {
      const auto b = box_end(i, e);
      CHECK(is_mono(b.comparison.underlying()));
      CHECK(counts(b.corner.underlying()) == union_counts(l, ik, k, n + 1));
    }
  }
  const auto square_boundary = box_boundary(boundary_inclusion(1));
  CHECK(counts(square_boundary.corner.underlying()) == std::vector<int>{4, 4});
}

TEST_CASE("box of an identity is an isomorphism") {
  const auto r = box_end(SimplicialMap::identity(standard_simplex(2)), 1);
  CHECK(is_iso(r.comparison.underlying()));
  const auto b = box_boundary(SimplicialMap::identity(standard_simplex(1)));
  CHECK(is_iso(b.comparison.underlying()));
}

TEST_CASE("end box of the empty inclusion is the end inclusion") {
  const auto x = horn(2, 1);
  const auto r = box_end(SimplicialMap::from_empty(x), 1);
  CHECK(counts(r.corner.underlying()) == counts(x));
  CHECK(r.comparison.underlying().images() == cylinder_on(x).end(1).underlying().images());
}

TEST_CASE("exactness audit") {
  std::vector<MarkedMap> monos;
  for (int n = 0; n <= 3; ++n) {
    monos.push_back(flat(boundary_inclusion(n)));
    for (int k = 0; k <= n && n > 0; ++k) monos.push_back(flat(horn_inclusion(n, k)));
    monos.push_back(flat(SimplicialMap::identity(standard_simplex(n))));
  }
  CHECK(exactness_audit(monos, Flavor::plain).empty());
  const auto d1 = standard_simplex(1);
  std::vector<MarkedMap> marked{MarkedMap(flat(d1), sharp(d1), SimplicialMap::identity(d1))};
  for (int n = 0; n <= 2; ++n) marked.push_back(flat(boundary_inclusion(n)));
  CHECK(exactness_audit(marked, Flavor::marked).empty());
}

TEST_CASE("marked box has the plain box underneath") {
  const auto d1 = standard_simplex(1);
  const MarkedMap i(flat(d1), sharp(d1), SimplicialMap::identity(d1));
  const auto marked = box_end(i, 1, Flavor::marked);
  const auto plain = box_end(SimplicialMap::identity(d1), 1);
  CHECK(marked.corner.underlying() == plain.corner.underlying());
  CHECK(marked.comparison.underlying() == plain.comparison.underlying());
}
