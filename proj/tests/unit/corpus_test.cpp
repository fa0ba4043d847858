#include "doctest.h"

#include <filesystem>

#include "slift/corpus.hpp"

using namespace slift;

TEST_CASE("built-in corpus is well formed") {
  const auto c = builtin_corpus();
  CHECK(c.objects.size() >= 10);
  for (const auto& o : c.objects) CHECK_MESSAGE(validate(o.value).empty(), o.name);
  for (const auto& m : c.maps) CHECK_MESSAGE(validate(m.value).empty(), m.name);
  for (const auto& m : c.marked_maps) CHECK_MESSAGE(validate(m.value).empty(), m.name);
  int grothendieck = 0;
  for (const auto& m : c.maps) grothendieck += m.has_tag("grothendieck");
  CHECK(grothendieck >= 3);
}

TEST_CASE("corpus directories round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "slift_corpus_test";
  std::filesystem::remove_all(dir);
  const auto c = builtin_corpus();
  write_corpus(c, dir);
  const auto back = read_corpus(dir);
  REQUIRE(back.size() == c.size());
  for (std::size_t k = 0; k < c.objects.size(); ++k) CHECK(back.objects[k].value == c.objects[k].value);
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    CHECK(back.maps[k].value.images() == c.maps[k].value.images());
    CHECK(back.maps[k].value.source() == c.maps[k].value.source());
    CHECK(back.maps[k].tags == c.maps[k].tags);
  }
  for (std::size_t k = 0; k < c.marked_maps.size(); ++k) CHECK(back.marked_maps[k].value == c.marked_maps[k].value);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_corpus(dir), Error);
}
