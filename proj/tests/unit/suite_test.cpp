#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "slift/suite.hpp"

using namespace slift;

TEST_CASE("empty check list gives an empty report") {
  SuiteConfig c;
  const auto rep = run_suite(c, builtin_corpus());
  CHECK(rep.checks.empty());
  CHECK(rep.all_passed());
  CHECK(render_text(rep).rfind("suite corpus=\"builtin\" dim_cap=3", 0) == 0);
}

TEST_CASE("heights too small for equivalence checks are rejected") {
  SuiteConfig c;
  c.dim_cap = 1;
  c.checks = {"cartesian-iso"};
  CHECK_THROWS_AS(validate_config(c), PreconditionError);
  c.checks = {"homotopy-relation"};
  CHECK_THROWS_AS(validate_config(c), PreconditionError);
  c.dim_cap = 2;
  CHECK_NOTHROW(validate_config(c));
  c.checks = {"absolute-fibrant"};
  CHECK_THROWS_AS(validate_config(c), PreconditionError);
  c.checks = {"generator-equivalence"};
  c.dim_cap = 1;
  CHECK_NOTHROW(validate_config(c));
  c.checks = {"no-such-check"};
  CHECK_THROWS_AS(validate_config(c), Error);
}

TEST_CASE("config files resolve the corpus against their own directory") {
  const auto dir = std::filesystem::temp_directory_path() / "slift_suite_test";
  std::filesystem::create_directories(dir / "corp");
  {
    std::ofstream out(dir / "suite.json");
    out << R"({"corpus": "corp", "dim_cap": 2, "budget": 4, "checks": ["exactness"]})";
  }
  const auto c = load_suite_config(dir / "suite.json");
  CHECK(std::filesystem::equivalent(c.corpus_dir, dir / "corp"));
  CHECK(c.dim_cap == 2);
  CHECK(c.budget == 4);
  CHECK(c.checks == std::vector<std::string>{"exactness"});
  std::filesystem::remove_all(dir);
}

TEST_CASE("cheap checks pass on the built-in corpus") {
  const auto corpus = builtin_corpus();
  for (const auto* name : {"exactness", "llp-rlp-duality", "generator-equivalence"}) {
    const auto r = run_check(name, corpus, 2, 10);
    CHECK_MESSAGE(r.status == "pass", name);
    CHECK(r.reverify_failures == 0);
  }
}
