#include "doctest.h"

#include "slift/category.hpp"
#include "slift/format.hpp"

using namespace slift;

namespace {

int error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("simplex files round-trip") {
  const auto d2 = standard_simplex(2);
  const auto text = emit(d2);
  CHECK(text.rfind("sset D2 dimcap 4\ndim 0:\n0\n1\n2\ndim 1:\n", 0) == 0);
  const auto doc = parse_document(text);
  const auto& back = doc.object("D2");
  CHECK_FALSE(back.marked);
  CHECK(back.value.underlying() == d2);
  CHECK(emit(doc) == text);

  for (const auto& x : {horn(3, 1), nerve(walking_isomorphism(), 3), product(standard_simplex(1), horn(2, 0)).object()}) {
    const auto t = emit(x);
    CHECK(emit(parse_document(t)) == t);
  }
}

TEST_CASE("degenerate faces use words") {
  const std::string text =
      "sset C dimcap 3\n"
      "dim 0:\n"
      "v\n"
      "dim 1:\n"
      "e | d0=-.v d1=-.v\n"
      "dim 2:\n"
      "t | d0=s0.v d1=-.e d2=-.e\n";
  const auto doc = parse_document(text);
  CHECK(doc.object("C").value.underlying().count(2) == 1);
  CHECK(emit(doc) == text);
}

TEST_CASE("marked files") {
  const auto m = sharp(horn(2, 1));
  const auto text = emit(m);
  CHECK(text.find("marked:\n") != std::string::npos);
  const auto doc = parse_document(text);
  CHECK(doc.object(format_name(horn(2, 1).name())).marked);
  CHECK(doc.object(format_name(horn(2, 1).name())).value == m);
  CHECK(emit(doc) == text);

  const auto flat_text = emit(flat(standard_simplex(1)));
  CHECK(parse_document(flat_text).object("D1").value.marked_count() == 0);
  CHECK(emit(parse_document(flat_text)) == flat_text);
}

TEST_CASE("map files") {
  Document doc;
  doc.add(horn_inclusion(2, 1));
  doc.add(to_point(standard_simplex(2)));
  const auto text = emit(doc);
  const auto back = parse_document(text);
  REQUIRE(back.maps.size() == 2);
  CHECK(back.maps[0].value.underlying().images() == horn_inclusion(2, 1).images());
  CHECK(back.maps[1].value.underlying().images() == to_point(standard_simplex(2)).images());
  CHECK(back.maps[0].target == back.maps[1].source);
  CHECK(emit(back) == text);

  Document marked;
  marked.add(sharp(horn_inclusion(2, 1)));
  CHECK(parse_document(emit(marked)).last_map().marked);
}

TEST_CASE("grammar violations cite the line") {
  const std::string header = "sset C dimcap 3\ndim 0:\nv\ndim 1:\ne | d0=-.v d1=-.v\ndim 2:\n";
  CHECK(error_line(header + "t | d0=s0.s1.v d1=-.e d2=-.e\n") == 7);
  CHECK(error_line(header + "t | d0=-.e d1=-.e\n") == 7);
  CHECK(error_line("sset D dimcap 3\ndim 0:\n0\n1\ndim 1:\n01 | d0=-.1 d1=-.0\nmarked:\ns0.0\n") == 8);
  CHECK(error_line("sset D dimcap 3\ndim 0:\n0\nmarked:\n-.0\n") == 5);
  CHECK(error_line("sset D dimcap 3\ndim 1:\n") == 2);
  CHECK(error_line("smap f : A -> B\n") == 1);
  CHECK(error_line("# comment\n\nbogus\n") == 3);
  // A face that does not glue: the header line is cited.
  CHECK(error_line("sset C dimcap 3\ndim 0:\na\nb\ndim 1:\ne | d0=-.a d1=-.b\nf | d0=-.b d1=-.a\ndim 2:\n"
                   "t | d0=-.e d1=-.e d2=-.f\n") == 1);
  CHECK(error_line("sset P dimcap 2\ndim 0:\nv\nsset Q dimcap 2\ndim 0:\na\nb\nsmap f : P -> Q\n") == 8);
}
