#include "doctest.h"

#include "slift/constructions.hpp"
#include "slift/map_search.hpp"

using namespace slift;

namespace {

std::vector<int> counts(const FiniteSimplicialSet& x) {
  std::vector<int> out;
  for (int d = 0; d <= x.dim(); ++d) out.push_back(x.count(d));
  return out;
}

// Nondegenerate k-simplices of Δᵖ × Δ^q are strictly increasing chains of
// length k+1 in the grid poset [p] × [q].
std::vector<int> grid_chain_counts(int p, int q) {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a <= p; ++a)
    for (int b = 0; b <= q; ++b) pts.emplace_back(a, b);
  std::vector<int> out(static_cast<std::size_t>(p + q + 1), 0);
  std::function<void(std::pair<int, int>, int)> extend = [&](std::pair<int, int> last, int len) {
    ++out[len - 1];
    for (auto nxt : pts)
      if (nxt != last && nxt.first >= last.first && nxt.second >= last.second) extend(nxt, len + 1);
  };
  for (auto s : pts) extend(s, 1);
  return out;
}

// Monotone maps [m] → [n].
int monotone_count(int m, int n) {
  int total = 0;
  std::function<void(int, int)> go = [&](int pos, int lo) {
    if (pos > m) {
      ++total;
      return;
    }
    for (int v = lo; v <= n; ++v) go(pos + 1, v);
  };
  go(0, 0);
  return total;
}

}  // namespace

TEST_CASE("standard simplices, boundaries and horns") {
  CHECK(counts(standard_simplex(2)) == std::vector<int>{3, 3, 1});
  CHECK(counts(boundary(2)) == std::vector<int>{3, 3});
  const auto h = horn(2, 1);
  CHECK(counts(h) == std::vector<int>{3, 2});
  CHECK_FALSE(h.find("02").has_value());
  CHECK(validate(standard_simplex(3)).empty());
  CHECK(validate(horn_inclusion(3, 1)).empty());
  CHECK(is_mono(horn_inclusion(2, 1)));
  CHECK_THROWS_AS(standard_simplex(5), DimCapOverflow);
}

TEST_CASE("validate reports a rewired face") {
  const auto d2 = standard_simplex(2);
  SSetBuilder b("bad");
  for (int d = 0; d <= 2; ++d)
    for (const auto& c : d2.cells(d)) b.add(d, c.id, c.faces);
  auto broken = b.build();
  // Rebuild with d0 of the 2-simplex pointing at a vertex.
  SSetBuilder b2("bad");
  for (int d = 0; d <= 1; ++d)
    for (const auto& c : d2.cells(d)) b2.add(d, c.id, c.faces);
  auto faces = d2.cell(2, 0).faces;
  faces[0] = Simplex::nondegenerate(0, 0);
  b2.add(2, "012", faces);
  const auto report = validate(b2.build());
  REQUIRE_FALSE(report.empty());
  CHECK(report.front().find("dimension mismatch") != std::string::npos);
  CHECK(validate(broken).empty());
}

TEST_CASE("products match the grid chain count") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    const auto prod = product(standard_simplex(p), standard_simplex(q));
    CHECK(counts(prod.object()) == grid_chain_counts(p, q));
    CHECK(validate(prod.object()).empty());
    CHECK(validate(prod.first()).empty());
    CHECK(validate(prod.second()).empty());
  }
  CHECK(counts(product(standard_simplex(1), standard_simplex(1)).object()) == std::vector<int>{4, 5, 2});
  CHECK_THROWS_AS(product(standard_simplex(2), standard_simplex(3)), DimCapOverflow);
}

TEST_CASE("diagonal of the square is mono") {
  const auto d1 = standard_simplex(1);
  const auto prod = product(d1, d1);
  const auto diag = prod.induce(SimplicialMap::identity(d1), SimplicialMap::identity(d1));
  CHECK(validate(diag).empty());
  CHECK(is_mono(diag));
  CHECK_FALSE(is_mono(to_point(d1)));
}

TEST_CASE("pullback over the point is the product, pullback along identity") {
  const auto x = horn(2, 0);
  const auto pt = standard_simplex(0);
  const auto v = vertex_inclusion(0, 0);
  Pullback pb(to_point(x), SimplicialMap::identity(pt));
  CHECK(counts(pb.object()) == counts(x));
  CHECK(is_iso(pb.first()));
}

TEST_CASE("pushout collapsing the endpoints of an edge") {
  const auto incl = boundary_inclusion(1);
  const auto collapse = to_point(incl.source());
  Pushout po(incl, collapse);
  CHECK(counts(po.object()) == std::vector<int>{1, 1});
  CHECK(validate(po.object()).empty());
  CHECK(validate(po.first()).empty());
  CHECK(validate(po.second()).empty());
  CHECK(compose(po.first(), incl) == compose(po.second(), collapse));
}

TEST_CASE("pushout of two triangles along an edge") {
  const auto d2 = standard_simplex(2);
  const auto edge = subobject(d2, [&](int d, int k) { return d == 0 ? d2.cell(0, k).id != "2" : d2.cell(d, k).id == "01"; });
  Pushout po(edge, edge);
  CHECK(counts(po.object()) == std::vector<int>{4, 5, 2});
  CHECK(validate(po.object()).empty());
  // Cocone property: the induced map back to Δ² restricts correctly.
  const auto fold = po.induce(SimplicialMap::identity(d2), SimplicialMap::identity(d2));
  CHECK(validate(fold).empty());
  CHECK(compose(fold, po.first()) == SimplicialMap::identity(d2));
}

TEST_CASE("coproduct") {
  const auto c = coproduct(standard_simplex(0), standard_simplex(1));
  CHECK(counts(c.object()) == std::vector<int>{3, 1});
  CHECK(validate(c.object()).empty());
}

TEST_CASE("hom_enumerate counts monotone maps between simplices") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(hom_enumerate(standard_simplex(m), standard_simplex(n)).size() ==
            static_cast<std::size_t>(monotone_count(m, n)));
  CHECK(hom_enumerate(standard_simplex(1), standard_simplex(1)).size() == 3);
  CHECK(hom_enumerate(standard_simplex(1), standard_simplex(0)).size() == 1);
  const auto x = horn(3, 1);
  CHECK(hom_enumerate(standard_simplex(0), x).size() == static_cast<std::size_t>(x.count(0)));
}

TEST_CASE("hom sets are closed under composition") {
  const auto x = standard_simplex(1);
  const auto y = horn(2, 1);
  const auto z = standard_simplex(2);
  const auto xz = hom_enumerate(x, z);
  for (const auto& f : hom_enumerate(x, y))
    for (const auto& g : hom_enumerate(y, z)) {
      const auto gf = compose(g, f);
      CHECK(std::find(xz.begin(), xz.end(), gf) != xz.end());
    }
}

TEST_CASE("maps out of a pushout biject with cocones") {
  const auto incl = boundary_inclusion(1);
  const auto collapse = to_point(incl.source());
  Pushout po(incl, collapse);
  for (const auto& z : {standard_simplex(1), horn(2, 1), boundary(2)}) {
    std::size_t cocones = 0;
    for (const auto& a : hom_enumerate(incl.target(), z))
      for (const auto& b : hom_enumerate(collapse.target(), z))
        if (compose(a, incl) == compose(b, collapse)) ++cocones;
    CHECK(hom_enumerate(po.object(), z).size() == cocones);
  }
}

TEST_CASE("maps into a pullback biject with cones") {
  const auto p = vertex_inclusion(1, 1);
  const auto u = SimplicialMap::identity(standard_simplex(1));
  Pullback pb(u, p);
  for (const auto& z : {standard_simplex(0), standard_simplex(1), boundary(1)}) {
    std::size_t cones = 0;
    for (const auto& f : hom_enumerate(z, u.source()))
      for (const auto& g : hom_enumerate(z, p.source()))
        if (compose(u, f) == compose(p, g)) ++cones;
    CHECK(hom_enumerate(z, pb.object()).size() == cones);
  }
}

TEST_CASE("map_from_vertices") {
  const auto d2 = standard_simplex(2);
  const auto d1 = standard_simplex(1);
  auto f = map_from_vertices(d2, d1, {Simplex::nondegenerate(0, 0), Simplex::nondegenerate(0, 0), Simplex::nondegenerate(0, 1)});
  REQUIRE(f.has_value());
  CHECK(validate(*f).empty());
  CHECK_FALSE(map_from_vertices(d2, d1, {Simplex::nondegenerate(0, 1), Simplex::nondegenerate(0, 0), Simplex::nondegenerate(0, 1)}));
}
