// Command-line front end: sort, preimages, fertility, count, series, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stacksort/classes.hpp"
#include "stacksort/gf.hpp"
#include "stacksort/stack_sort.hpp"
#include "stacksort/text.hpp"
#include "stacksort/verify.hpp"

using namespace stacksort;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_sort(const std::string& text, std::size_t iterations) {
  std::cout << to_string(sort_iterate(parse_permutation(text), iterations)) << "\n";
  return 0;
}

int cmd_preimages(const std::string& text) {
  for (const auto& q : preimages(parse_permutation(text))) std::cout << to_string(q) << "\n";
  return 0;
}

int cmd_fertility(const std::string& text, std::optional<std::size_t> decompose) {
  const Permutation p = parse_permutation(text);
  const BigInt brute = fertility(p);
  if (!decompose) {
    std::cout << brute << "\n";
    return 0;
  }
  if (!p.is_normalized()) throw UsageError("--decompose needs a normalized permutation");
  const auto tbd = tail_bound_descents(p);
  if (std::find(tbd.begin(), tbd.end(), *decompose) == tbd.end())
    throw UsageError(std::to_string(*decompose) + " is not a tail-bound descent of " +
                     to_string(p));
  const BigInt via_lemma = fertility_by_decomposition(p, *decompose);
  std::cout << via_lemma << "\n";
  if (via_lemma == brute) {
    std::cout << "agrees with brute force\n";
    return 0;
  }
  std::cout << "DISAGREES with brute force (" << brute << ")\n";
  return 1;
}

int cmd_count(const std::string& cls, bool vincular, std::size_t n_max, bool by_descents,
              bool by_tail, std::size_t cap) {
  const ClassSpec spec{parse_pattern_list(cls, vincular)};
  check_cap(n_max, cap);
  std::ostringstream out;
  out << "n" << (by_descents ? ",k" : "") << (by_tail ? ",ell" : "") << ",count\n";
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto members = enumerate_class(n, spec, cap);
    if (!by_descents && !by_tail) {
      BigInt total = 0;
      for (const auto& p : members) total += fertility(p);
      out << n << "," << total << "\n";
      continue;
    }
    // (k, ell) -> count, k and ell pinned to 0 when not requested
    std::map<std::pair<std::size_t, std::size_t>, BigInt> cells;
    const std::size_t k_top = by_descents ? (n == 0 ? 0 : n - 1) : 0;
    const std::size_t l_top = by_tail ? n : 0;
    for (std::size_t k = 0; k <= k_top; ++k)
      for (std::size_t l = 0; l <= l_top; ++l) cells[{k, l}] = 0;
    for (const auto& p : members) {
      const std::size_t k = by_descents ? des(p) : 0;
      const std::size_t l = by_tail ? tail_length(p) : 0;
      cells[{k, l}] += fertility(p);
    }
    for (const auto& [kl, count] : cells) {
      out << n;
      if (by_descents) out << "," << kl.first;
      if (by_tail) out << "," << kl.second;
      out << "," << count << "\n";
    }
  }
  std::cout << out.str();
  return 0;
}

int cmd_series(const std::string& which, std::size_t order, std::size_t z_degree) {
  if (which == "catalan") {
    std::cout << format_series(catalan_series(order));
  } else if (which == "thm5") {
    std::cout << format_series(av231_321_preimage_gf(order));
  } else if (which == "thm6") {
    std::cout << format_series(boolean_catalan_gf(order));
  } else if (which == "jhat") {
    if (order < 1) throw UsageError("jhat needs --order >= 1");
    std::cout << format_series(descent_refined_gf(order, z_degree));
  } else {
    throw UsageError("unknown series '" + which + "'");
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::size_t cap, bool as_json) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UsageError("unknown suite '" + suite + "'");
  const Report report = run_suite(suite, cap);
  if (as_json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stack-sorting preimages: compute, count and verify"};
  app.require_subcommand(1);

  std::string perm_text;
  std::size_t iterations = 1;
  auto* sort = app.add_subcommand("sort", "Apply the stack-sorting map");
  sort->add_option("permutation", perm_text, "entries separated by single spaces")->required();
  sort->add_option("--iterations,-t", iterations, "number of passes")->capture_default_str();

  auto* pre = app.add_subcommand("preimages", "List s^-1(p), one per line, lexicographic");
  pre->add_option("permutation", perm_text)->required();

  std::optional<std::size_t> decompose;
  auto* fert = app.add_subcommand("fertility", "Print |s^-1(p)|");
  fert->add_option("permutation", perm_text)->required();
  fert->add_option("--decompose", decompose,
                   "count through the hooks of this tail-bound descent and compare");

  std::string cls;
  bool vincular = false, by_descents = false, by_tail = false;
  std::size_t n_max = 0, cap = kDefaultCap;
  auto* count = app.add_subcommand("count", "CSV of class fertilities |s^-1(Av_n(...))|");
  count->add_option("--class", cls, "comma-separated patterns, e.g. 231,321")->required();
  count->add_flag("--vincular", vincular, "allow bracketed adjacency blocks, e.g. [32]41");
  count->add_option("--n-max", n_max, "rows for n = 0..n-max")->required();
  count->add_flag("--by-descents", by_descents, "split by descents of the target");
  count->add_flag("--by-tail", by_tail, "split by tail length of the target");
  count->add_option("--cap", cap, "largest n allowed")->capture_default_str();

  std::string which;
  std::size_t order = 10, z_degree = 0;
  bool z_given = false;
  auto* series = app.add_subcommand("series", "Print generating-function coefficients");
  series->add_option("--which", which, "catalan | thm5 | thm6 | jhat")
      ->required()
      ->check(CLI::IsMember({"catalan", "thm5", "thm6", "jhat"}));
  series->add_option("--order", order, "x truncation order")->capture_default_str();
  series->add_option("--z-degree", z_degree, "z degree for jhat (defaults to --order)")
      ->each([&](const std::string&) { z_given = true; });

  std::string suite = "all";
  bool as_json = false;
  std::size_t verify_cap = kDefaultCap;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "all | lemma | classes | thm4 | thm5 | thm6 | eq16 | kernels | ...")
      ->capture_default_str();
  verify->add_option("--cap", verify_cap, "largest brute-force n")->capture_default_str();
  verify->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*sort) return cmd_sort(perm_text, iterations);
    if (*pre) return cmd_preimages(perm_text);
    if (*fert) return cmd_fertility(perm_text, decompose);
    if (*count) return cmd_count(cls, vincular, n_max, by_descents, by_tail, cap);
    if (*series) return cmd_series(which, order, z_given ? z_degree : order);
    if (*verify) return cmd_verify(suite, verify_cap, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
