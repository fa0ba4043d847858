#include "doctest.h"

#include <set>

#include "slift/category.hpp"
#include "slift/homotopy.hpp"
#include "slift/map_search.hpp"

using namespace slift;

namespace {

// A covariant two-to-one set diagram on [1]; its total nerve is a left fibration.
struct Cospan {
  SmallCategory base = ordinal(1);
  Grothendieck el;
  FiniteSimplicialSet total, nbase;
  SimplicialMap p;

  Cospan() {
    el = grothendieck(base, set_diagram(false, {{"a", "b"}, {"c"}}, {{}, {}, {0, 0}}));
    total = nerve(el.total);
    nbase = nerve(base);
    p = nerve_map(el.projection(base), total, nbase);
  }

  SimplicialMap end_vertex() const {
    return *map_from_vertices(standard_simplex(0), nbase, {*nbase.find("1")});
  }
};

}  // namespace

TEST_CASE("homotopies between maps") {
  const auto f = vertex_inclusion(1, 0);
  const auto g = *map_from_vertices(f.source(), f.target(), {Simplex::nondegenerate(0, 1)});
  auto h = i_homotopy(f, f);
  REQUIRE(h.has_value());
  CHECK(validate(*h).empty());
  CHECK(i_homotopy(f, g).has_value());
  CHECK_FALSE(i_homotopy(g, f).has_value());
}

TEST_CASE("homotopy classes") {
  const auto pt = standard_simplex(0);
  const auto one = homotopy_classes(pt, pt);
  CHECK(one.maps.size() == 1);
  CHECK(one.class_count == 1);
  CHECK(one.relation_closed);

  // I ⊗ Δ⁰ is Δ¹, so the generated pairs are the endpoint pairs of edges of W.
  const auto w = nerve(ordinal(1));
  std::set<std::pair<Simplex, Simplex>> ends;
  for (const auto& e : hom_enumerate(standard_simplex(1), w))
    ends.emplace(e(Simplex::nondegenerate(0, 0)), e(Simplex::nondegenerate(0, 1)));
  const auto t = homotopy_classes(pt, w);
  CHECK(t.maps.size() == 2);
  CHECK(t.generating.size() == ends.size());
  CHECK(t.class_count == 1);
  CHECK_FALSE(t.relation_closed);
  CHECK(verify(t).empty());

  const auto j = nerve(walking_isomorphism(), 3);
  const auto tj = homotopy_classes(standard_simplex(1), j);
  CHECK(tj.class_count == 1);
  CHECK(tj.relation_closed);
  CHECK(verify(tj).empty());

  const auto two = homotopy_classes(pt, boundary(1));
  CHECK(two.class_count == 2);
  CHECK(two.relation_closed);
}

TEST_CASE("deformation retracts") {
  CHECK_FALSE(find_deformation_retract(boundary_inclusion(1), RetractDirection::right).has_value());

  const auto v1 = vertex_inclusion(1, 1);
  const auto c = find_deformation_retract(v1, RetractDirection::right);
  REQUIRE(c.has_value());
  CHECK(verify(*c).empty());
  CHECK_FALSE(find_deformation_retract(v1, RetractDirection::left).has_value());
  const auto l = find_deformation_retract(vertex_inclusion(1, 0), RetractDirection::left);
  REQUIRE(l.has_value());
  CHECK(verify(*l).empty());

  for (int n = 0; n <= 2; ++n) {
    const auto gen = box_end(SimplicialMap::from_empty(standard_simplex(n)), 1);
    const auto cert = find_deformation_retract(gen.comparison, RetractDirection::right, Flavor::plain);
    REQUIRE(cert.has_value());
    CHECK(verify(*cert).empty());
  }

  const auto id = find_deformation_retract(SimplicialMap::identity(horn(2, 1)), RetractDirection::right);
  REQUIRE(id.has_value());
  CHECK(is_iso(id->r.underlying()));

  const auto dual = find_deformation_retract(to_point(standard_simplex(1)), RetractDirection::dual_right);
  REQUIRE(dual.has_value());
  CHECK(verify(*dual).empty());
  CHECK_FALSE(find_deformation_retract(to_point(boundary(1)), RetractDirection::dual_right).has_value());

  // A broken certificate is caught.
  auto bad = *c;
  bad.h = MarkedMap(bad.h.source(), bad.h.target(),
                    compose(SimplicialMap::identity(v1.target()), cylinder_on(v1.target()).collapse().underlying()));
  CHECK_FALSE(verify(bad).empty());
}

TEST_CASE("corpus-relative weak equivalences") {
  const std::vector<FiniteSimplicialSet> corpus{standard_simplex(0), boundary(1), nerve(walking_isomorphism(), 3)};
  const auto id = corpus_weak_equivalence(SimplicialMap::identity(standard_simplex(1)), WeqSide::contra, corpus);
  CHECK(id.bijective_for_corpus);
  CHECK(corpus_weak_equivalence(vertex_inclusion(1, 1), WeqSide::contra, corpus).bijective_for_corpus);

  const auto empty = corpus_weak_equivalence(SimplicialMap::from_empty(standard_simplex(0)), WeqSide::contra,
                                             {boundary(1)});
  CHECK_FALSE(empty.bijective_for_corpus);
  REQUIRE(empty.per_object.size() == 1);
  CHECK(empty.per_object[0].source_classes == 1);
  CHECK(empty.per_object[0].target_classes == 2);

  CHECK_THROWS_AS(corpus_weak_equivalence(vertex_inclusion(1, 1), WeqSide::contra, {nerve(ordinal(1))}),
                  PreconditionError);
}

TEST_CASE("finality certificates") {
  for (int n = 0; n <= 2; ++n) {
    const auto gen = box_end(boundary_inclusion(n), 1).comparison.underlying();
    const auto r = certify_final(gen, 10);
    CHECK(r.certified);
    CHECK(r.factorization.steps.size() == 1);
    CHECK(verify(r, gen).empty());
  }
  const auto id = certify_final(SimplicialMap::identity(standard_simplex(1)), 1);
  CHECK(id.certified);
  CHECK(id.factorization.steps.empty());

  for (int n = 0; n <= 1; ++n) {
    const auto initial = box_end(SimplicialMap::from_empty(standard_simplex(n)), 0).comparison.underlying();
    CHECK_FALSE(certify_final(initial, 10).certified);
  }
  CHECK_THROWS_AS(certify_final(vertex_inclusion(1, 1), 0), PreconditionError);
}

TEST_CASE("properness of left fibrations") {
  Cospan c;
  const auto r = properness_experiment(c.end_vertex(), c.p, {to_point(boundary(1))});
  CHECK(r.holds);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate_errors.empty());
  CHECK(r.j.source().underlying().count(0) == 1);

  const auto trivial = properness_experiment(c.end_vertex(), SimplicialMap::identity(c.nbase), {});
  CHECK(trivial.holds);

  const MarkedMap sp(sharp(c.total), sharp(c.nbase), c.p);
  const auto marked = properness_experiment(sharp(c.end_vertex()), sp, Flavor::marked, {});
  CHECK(marked.holds);
  CHECK(marked.certificate_errors.empty());

  const auto start = *map_from_vertices(standard_simplex(0), c.nbase, {*c.nbase.find("0")});
  CHECK_THROWS_AS(properness_experiment(c.end_vertex(), start, {}), PreconditionError);
}
