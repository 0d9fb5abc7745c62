#include "doctest.h"
#include "stacksort/verify.hpp"

using namespace stacksort;

TEST_CASE("suites run and report") {
  for (const char* name : {"lemma", "thm5", "eq16", "kernels"}) {
    const Report r = run_suite(name, 6);
    INFO(r.to_text());
    CHECK(r.passed());
    CHECK(r.suite == name);
    CHECK_FALSE(r.checks.empty());
  }
  CHECK_THROWS_AS(run_suite("nonsense", 6), std::invalid_argument);
  CHECK(suite_names().front() == "all");
}

TEST_CASE("report schema") {
  const Report r = run_suite("lemma", 5);
  const nlohmann::json j = r.to_json();
  CHECK(j["suite"] == "lemma");
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("params"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("actual"));
    CHECK(c["pass"].is_boolean());
  }
  Report failing{"x", {Check{"broken", {}, "1", "2", false}}};
  CHECK_FALSE(failing.passed());
  CHECK(failing.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  CHECK(run_suite("classes", 5).to_json().dump() == run_suite("classes", 5).to_json().dump());
}
