#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace stacksort {

struct Check {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  nlohmann::json to_json() const;
  /// One "PASS|FAIL  name  params  expected/actual" line per check.
  std::string to_text() const;
};

/// Suite names accepted by run_suite, "all" first.
const std::vector<std::string>& suite_names();

/// Runs a suite with every brute-force length bounded by cap. Throws
/// std::invalid_argument for an unknown suite name. Failures are recorded in
/// the report, never thrown.
Report run_suite(std::string_view suite, std::size_t cap);

}  // namespace stacksort
