#include "doctest.h"

#include "slift/cartesian.hpp"
#include "slift/category.hpp"

using namespace slift;

namespace {

// Total category of F : [1]ᵒᵖ → Cat with F(0) = [1], F(1) = {y} and F(0 → 1) picking out 1.
struct TwoArrowFibration {
  SmallCategory base = ordinal(1);
  Grothendieck el;
  FiniteSimplicialSet total, nbase;
  SimplicialMap p;

  TwoArrowFibration() {
    CategoryDiagram diagram;
    diagram.contravariant = true;
    diagram.fibers = {ordinal(1), discrete_category({"y"})};
    diagram.on_objects = {{}, {}, {1}};
    diagram.on_morphisms = {{}, {}, {1}};
    el = grothendieck(base, diagram);
    total = nerve(el.total);
    nbase = nerve(base);
    p = nerve_map(el.projection(base), total, nbase);
  }

  std::string endpoints(int edge) const {
    const Simplex e = Simplex::nondegenerate(1, edge);
    return total.cell(total.face(e, 1)).id + ">" + total.cell(total.face(e, 0)).id;
  }
};

}  // namespace

TEST_CASE("every edge is Cartesian for an identity") {
  for (const auto& x : {standard_simplex(2), horn(2, 1), nerve(walking_isomorphism(), 3)}) {
    for (const auto& v : cartesian_edges(SimplicialMap::identity(x), CartesianMethod::cross)) {
      CHECK(v.is_cartesian);
      CHECK(v.agreement);
    }
  }
}

TEST_CASE("degenerate edges are Cartesian") {
  const auto x = nerve(ordinal(2));
  const auto p = to_point(x);
  for (int v = 0; v < x.count(0); ++v) {
    const auto verdict = is_p_cartesian(p, degeneracy(Simplex::nondegenerate(0, v), 0), CartesianMethod::cross);
    CHECK(verdict.is_cartesian);
    CHECK(verdict.agreement);
  }
}

TEST_CASE("Cartesian edges of a Grothendieck construction") {
  TwoArrowFibration fib;
  std::map<std::string, bool> expected{{"0:0>0:1", false}, {"0:0>1:y", false}, {"0:1>1:y", true}};
  const auto verdicts = cartesian_edges(fib.p, CartesianMethod::cross);
  REQUIRE(verdicts.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(verdicts[k].agreement);
    CHECK(verdicts[k].is_cartesian == expected.at(fib.endpoints(k)));
  }
  const auto cf = is_cartesian_fibration(fib.p);
  CHECK(cf.holds);
  CHECK(cf.inner);
}

TEST_CASE("natural markings") {
  const auto d1 = standard_simplex(1);
  CHECK(natural_marking(SimplicialMap::identity(d1)).marked_count() == 1);
  const auto x = nerve(ordinal(2));
  CHECK(natural_marking(to_point(x)).marked_count() == 0);
  CHECK_THROWS_AS(natural_marking(to_point(horn(2, 1))), PreconditionError);
}

TEST_CASE("Cartesian fibration recognition") {
  CHECK(is_cartesian_fibration(to_point(nerve(walking_isomorphism(), 4))).holds);
  CHECK(is_cartesian_fibration(to_point(standard_simplex(2))).holds);
  const auto horn_incl = is_cartesian_fibration(horn_inclusion(2, 1));
  CHECK_FALSE(horn_incl.holds);
  CHECK_FALSE(horn_incl.inner);
  CHECK(is_cartesian_fibration(SimplicialMap::identity(standard_simplex(1))).holds);
}

TEST_CASE("homotopy category and equivalences") {
  const auto d1 = standard_simplex(1);
  const HomotopyCategory hc(d1);
  CHECK(hc.class_count() == 3);
  CHECK_FALSE(is_equivalence(hc, Simplex::nondegenerate(1, 0)));
  CHECK(is_equivalence(hc, degeneracy(Simplex::nondegenerate(0, 0), 0)));

  const auto j = nerve(walking_isomorphism(), 3);
  const HomotopyCategory hj(j);
  CHECK(is_equivalence(hj, *j.find("f")));
  CHECK(is_equivalence(hj, *j.find("g")));
  CHECK(hj.compose(hj.class_of(*j.find("g")), hj.class_of(*j.find("f"))) == hj.identity(0));

  CHECK_THROWS_WITH_AS(HomotopyCategory(d1, 2), doctest::Contains("unsound height"), PreconditionError);
  CHECK_THROWS_AS(HomotopyCategory(horn(2, 1)), PreconditionError);
}

TEST_CASE("marked right fibrations") {
  const auto d1 = standard_simplex(1);
  const auto pt = standard_simplex(0);
  const auto over_point = MarkedMap(sharp(d1), sharp(pt), to_point(d1).with_target(pt));
  const auto v = is_marked_right_fibration(over_point, RfibMethod::cross);
  CHECK_FALSE(v.holds);
  CHECK(v.agreement);

  CHECK(is_marked_right_fibration(identity(sharp(pt)), RfibMethod::cross).holds);

  TwoArrowFibration fib;
  const MarkedMap natural(natural_marking(fib.p), sharp(fib.nbase), fib.p);
  const auto nv = is_marked_right_fibration(natural, RfibMethod::cross);
  CHECK(nv.agreement);
  CHECK(nv.holds);

  const auto j = nerve(walking_isomorphism(), 3);
  const auto jp = MarkedMap(sharp(j), sharp(pt), to_point(j).with_target(pt));
  CHECK(is_marked_right_fibration(jp, RfibMethod::cross).holds);
  const auto jflat = MarkedMap(flat(j), sharp(pt), to_point(j).with_target(pt));
  const auto jf = is_marked_right_fibration(jflat, RfibMethod::cross);
  CHECK_FALSE(jf.holds);
  CHECK(jf.agreement);
}
