#include "stacksort/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "stacksort/classes.hpp"
#include "stacksort/compositions.hpp"
#include "stacksort/gf.hpp"
#include "stacksort/hooks.hpp"
#include "stacksort/stack_sort.hpp"
#include "stacksort/text.hpp"

namespace stacksort {

using nlohmann::json;

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json Report::to_json() const {
  json out{{"suite", suite}, {"checks", json::array()}};
  for (const auto& c : checks)
    out["checks"].push_back({{"name", c.name},
                             {"params", c.params},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"pass", c.pass}});
  return out;
}

std::string Report::to_text() const {
  std::string out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    out += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + "  " + c.params.dump();
    out += "  expected=" + c.expected + " actual=" + c.actual + "\n";
  }
  out += suite + ": " + std::to_string(checks.size() - failed) + "/" +
         std::to_string(checks.size()) + " checks passed\n";
  return out;
}

namespace {

Check make(std::string name, json params, const std::string& expected, const std::string& actual) {
  Check c{std::move(name), std::move(params), expected, actual, expected == actual};
  return c;
}

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_string(values[i]);
  }
  return out;
}

ClassSpec patterns(std::string_view text) {
  return ClassSpec{parse_pattern_list(text, /*allow_bonds=*/true)};
}

std::size_t upto(std::size_t want, std::size_t cap) { return std::min(want, cap); }

void suite_sortable(std::size_t cap, std::vector<Check>& out) {
  out.push_back(make("sort_once(14253)", json::object(), "1 2 4 3 5",
                     to_string(sort_once(Permutation{1, 4, 2, 5, 3}))));
  const std::size_t nmax = upto(8, cap);
  std::vector<BigInt> want1, got1, got_av, want2, got2;
  for (std::size_t n = 1; n <= nmax; ++n) {
    want1.push_back(catalan(static_cast<int>(n)));
    got1.push_back(count_t_sortable(n, 1, cap));
    got_av.push_back(BigInt(enumerate_class(n, patterns("231"), cap).size()));
    const long m = static_cast<long>(n);
    want2.push_back(2 * binomial(3 * m, m) / ((m + 1) * (2 * m + 1)));
    got2.push_back(count_t_sortable(n, 2, cap));
  }
  out.push_back(make("W_1(n) = C_n", {{"n_max", nmax}}, join(want1), join(got1)));
  out.push_back(make("|Av_n(231)| = C_n", {{"n_max", nmax}}, join(want1), join(got_av)));
  out.push_back(make("W_2(n) = 2 binom(3n,n) / ((n+1)(2n+1))", {{"n_max", nmax}}, join(want2),
                     join(got2)));
}

void suite_lemma(std::size_t cap, std::vector<Check>& out) {
  for (std::size_t n = 2; n <= upto(7, cap); ++n) {
    std::size_t pairs = 0, bad = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      for (std::size_t d : tail_bound_descents(p)) {
        ++pairs;
        if (fertility_by_decomposition(p, d) != fertility(p)) ++bad;
      }
    });
    out.push_back(make("decomposition over tail-bound descents equals fertility",
                       {{"n", n}, {"pairs", pairs}}, "0 mismatches",
                       std::to_string(bad) + " mismatches"));
  }
}

void suite_classes(std::size_t cap, std::vector<Check>& out) {
  const std::size_t nmax = upto(8, cap);
  struct Equality {
    const char* name;
    const char* lhs;
    const char* rhs;
  };
  const Equality equalities[] = {
      {"s^-1(Av(231,321)) = Av(2341,3241,45231)", "231,321", "2341,3241,45231"},
      {"s^-1(Av(321)) = Av(34251,35241,45231)", "321", "34251,35241,45231"},
      {"s^-1(Av(132,231)) = Av(2341,1342,[32]41,[31]42)", "132,231", "2341,1342,[32]41,[31]42"},
      {"s^-1(Av(132,312)) = Av(1342,3142,3412,34[21])", "132,312", "1342,3142,3412,34[21]"},
  };
  for (const auto& eq : equalities) {
    std::string actual = "equal";
    for (std::size_t n = 0; n <= nmax && actual == "equal"; ++n)
      if (auto w = class_equality_counterexample(n, patterns(eq.lhs), patterns(eq.rhs), cap))
        actual = "differ at " + to_string(*w);
    out.push_back(make(eq.name, {{"n_max", nmax}}, "equal", actual));
  }
  auto characterization = [&](const char* name, const std::function<bool(const Permutation&)>& fast,
                              const std::function<bool(const Permutation&)>& direct) {
    std::string actual = "agree";
    for (std::size_t n = 0; n <= nmax && actual == "agree"; ++n)
      for_each_permutation(n, [&](const Permutation& s) {
        if (actual == "agree" && fast(s) != direct(s)) actual = "disagree at " + to_string(s);
      });
    out.push_back(make(name, {{"n_max", nmax}}, "agree", actual));
  };
  characterization("West 2-stack-sortable characterization", is_west_2ss,
                   [](const Permutation& s) { return is_t_stack_sortable(s, 2); });
  const auto p132 = patterns("132");
  characterization("s^-1(Av(132)) characterization", in_preimage_av132,
                   [&](const Permutation& s) { return avoids_all(sort_once(s), p132.forbidden); });
}

void suite_thm5(std::size_t cap, std::vector<Check>& out) {
  const std::size_t nmax = upto(10, cap);
  const TruncSeries gf = av231_321_preimage_gf(nmax);
  std::vector<BigInt> want, got;
  for (std::size_t n = 0; n <= nmax; ++n) {
    want.push_back(boost::multiprecision::numerator(gf[n]));
    got.push_back(class_fertility(n, flavor_class(Flavor::kAv231_321), cap));
  }
  out.push_back(make("|s^-1(Av_n(231,321))| = [x^n] 1/(1 - x C(x C(x)))", {{"n_max", nmax}},
                     join(want), join(got)));
  std::vector<BigInt> forward;
  for (std::size_t n = 0; n <= upto(3, cap); ++n)
    forward.push_back(class_fertility_forward(n, flavor_class(Flavor::kAv231_321), cap));
  out.push_back(make("first values by the forward map", {{"n_max", upto(3, cap)}},
                     join(std::vector<BigInt>(want.begin(), want.begin() + forward.size())),
                     join(forward)));
}

void suite_thm6(std::size_t cap, std::vector<Check>& out) {
  const std::size_t nmax = upto(9, cap);
  const TruncSeries gf = boolean_catalan_gf(nmax);
  std::vector<BigInt> want;
  for (std::size_t n = 1; n <= nmax; ++n) want.push_back(boost::multiprecision::numerator(gf[n]));
  for (const char* cls : {"132,312", "231,312", "132,231"}) {
    std::vector<BigInt> got;
    for (std::size_t n = 1; n <= nmax; ++n) got.push_back(class_fertility(n, patterns(cls), cap));
    out.push_back(make(std::string("|s^-1(Av_n(") + cls + "))| = Boolean-Catalan",
                       {{"n_max", nmax}}, join(want), join(got)));
  }
}

void suite_thm4(std::size_t cap, std::vector<Check>& out) {
  for (std::size_t n = 1; n <= upto(9, cap); ++n) {
    std::vector<BigInt> want, got;
    for (std::size_t k = 0; k <= n; ++k) {
      want.push_back(descent_refined_closed_form(static_cast<long>(n), static_cast<long>(k)));
      got.push_back(descent_refined_brute(n, k, cap));
    }
    out.push_back(make("|s^-1(Av_{n,k}(231,312,321))| closed form, k = 0..n", {{"n", n}},
                       join(want), join(got)));
  }
}

void suite_recurrences(std::size_t cap, std::vector<Check>& out) {
  const int total = static_cast<int>(upto(8, cap));
  const std::size_t t = static_cast<std::size_t>(total);
  auto compare = [&](const char* name, const RefinedCountTable& rec, const RefinedCountTable& brute) {
    const auto e = compare_tables(rec.exact, brute.exact, total);
    const auto a = compare_tables(rec.at_least, brute.at_least, total);
    out.push_back(make(name, {{"n_plus_l_max", total}, {"entries", e.compared + a.compared}},
                       "0 mismatches",
                       std::to_string(e.mismatches.size() + a.mismatches.size()) + " mismatches" +
                           (e.compared && a.compared ? "" : " (nothing compared)")));
  };
  compare("tail-length recurrence for Av(231,321)", recurrence_av231_321(t, t),
          refined_counts_brute(Flavor::kAv231_321, t, cap));
  compare("tail-length recurrence for Av(132,231)", recurrence_av132_231(t, t),
          refined_counts_brute(Flavor::kAv132_231, t, cap));
  compare("descent-refined recurrence for Av(231,312,321)", recurrence_av231_312_321(t, t, t),
          refined_counts_brute(Flavor::kAv231_312_321, t, cap));
}

void suite_eq16(std::size_t cap, std::vector<Check>& out) {
  std::size_t cells = 0, bad = 0;
  for (int n = 1; n <= 14; ++n)
    for (int k = 0; k <= n; ++k) {
      ++cells;
      if (!verify_composition_identity(n, k)) ++bad;
    }
  out.push_back(make("sum_q C_q D_q = closed form = recurrence", {{"n_max", 14}, {"cells", cells}},
                     "0 mismatches", std::to_string(bad) + " mismatches"));
  const std::size_t nmax = upto(8, cap);
  std::vector<BigInt> want, got;
  for (std::size_t n = 1; n <= nmax; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= static_cast<int>(n); ++k)
      for (const auto& q : enumerate_compositions(k + 1, static_cast<int>(n) - k))
        sum += catalan_product(q) * d_of(q);
    got.push_back(sum);
    want.push_back(class_fertility(n, flavor_class(Flavor::kAv231_312_321), cap));
  }
  out.push_back(make("sum_k sum_q C_q D_q = |s^-1(Av_n(231,312,321))|", {{"n_max", nmax}},
                     join(want), join(got)));
}

std::string zero_or_first(const TruncSeries& r) {
  const std::size_t v = r.valuation();
  if (v > r.order()) return "0";
  return "x^" + std::to_string(v) + " coefficient " + to_string(r[v]);
}

void suite_kernels(std::size_t, std::vector<Check>& out) {
  const TruncSeries c50 = catalan_series(50);
  out.push_back(make("x C^2 + 1 - C", {{"order", 50}}, "0",
                     zero_or_first(catalan_functional_residual(c50))));
  const TruncSeries v = av231_321_preimage_gf(25);
  out.push_back(make("Q(1/(1 - x C(x C(x))), x)", {{"order", 25}}, "0",
                     zero_or_first(quartic_residual(v))));
  const TruncSeries y5 = kernel_root_av231_321(15);
  out.push_back(make("kernel residual for Av(231,321)", {{"order", 15}}, "0",
                     zero_or_first(kernel_residual_av231_321(y5))));
  out.push_back(make("C(Y) - 1/(1 - x C(x C(x)))", {{"order", 15}}, "0",
                     zero_or_first(compose(catalan_series(15), y5) - av231_321_preimage_gf(15))));
  const TruncSeries y6 = kernel_root_av132_231(20);
  out.push_back(make("x Y (C(Y) - 1) - Y + x", {{"order", 20}}, "0",
                     zero_or_first(kernel_residual_av132_231(y6))));
  const BivarSeries j = descent_refined_gf(16, 7);
  const auto r = descent_refined_fixed_point_residual(j).first_nonzero();
  out.push_back(make("J = x + J^2 / (1 - z J^2)", {{"x_order", 16}, {"z_degree", 7}}, "0",
                     r ? "x^" + std::to_string(r->first) + " z^" + std::to_string(r->second)
                       : "0"));
  std::size_t bad = 0;
  for (std::size_t n = 1; n + 1 <= 16; ++n)
    for (std::size_t k = 0; k <= 7; ++k)
      if (j.at(n + 1, k) != Rational(descent_refined_closed_form(static_cast<long>(n),
                                                                  static_cast<long>(k))))
        ++bad;
  out.push_back(make("[x^{n+1} z^k] J = closed form", {{"x_order", 16}, {"z_degree", 7}},
                     "0 mismatches", std::to_string(bad) + " mismatches"));
}

void suite_functional(std::size_t cap, std::vector<Check>& out) {
  const std::size_t xy = std::min<std::size_t>(6, cap / 2);
  const std::size_t tri = std::min<std::size_t>(5, cap / 2);
  for (const auto& eq : verify_bivariate_functional_eqs(xy, xy, tri, cap))
    out.push_back(make(eq.name, {{"truncation", eq.truncation}}, "0",
                       eq.holds ? "0" : eq.first_failure));
}

void suite_properties(std::size_t cap, std::vector<Check>& out) {
  const std::size_t nmax = upto(7, cap);
  for (std::size_t n = 0; n <= nmax; ++n) {
    BigInt total = 0;
    std::size_t round_trip_bad = 0, zeil_bad = 0;
    std::map<Permutation, std::vector<Permutation>> forward;
    for_each_permutation(n, [&](const Permutation& q) { forward[sort_once(q)].push_back(q); });
    for_each_permutation(n, [&](const Permutation& p) {
      total += fertility(p);
      const auto pre = preimages(p);
      auto it = forward.find(p);
      const auto& expect = it == forward.end() ? std::vector<Permutation>{} : it->second;
      if (pre != expect) ++round_trip_bad;
      if (n >= 1 && zeil(p) != std::min(rmax(p), tail_length(sort_once(p)))) ++zeil_bad;
    });
    BigInt fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    out.push_back(make("sum of fertilities over S_n = n!", {{"n", n}}, to_string(fact),
                       to_string(total)));
    out.push_back(make("preimages agree with the forward map", {{"n", n}}, "0 mismatches",
                       std::to_string(round_trip_bad) + " mismatches"));
    out.push_back(make("zeil = min(rmax, tail length of s)", {{"n", n}}, "0 mismatches",
                       std::to_string(zeil_bad) + " mismatches"));
  }
  std::size_t d_bad = 0, d_cells = 0;
  for (int a = 1; a <= 13; ++a)
    for (int b = a; a + b <= 14; ++b)
      for (const auto& x : enumerate_compositions(a, b)) {
        ++d_cells;
        if (d_of(x) != d_of_oracle(x)) ++d_bad;
      }
  out.push_back(make("D_x by DP = D_x by enumeration", {{"a_plus_b_max", 14}, {"cells", d_cells}},
                     "0 mismatches", std::to_string(d_bad) + " mismatches"));
  std::size_t axiom_bad = 0;
  for (int a = 1; a <= 9; ++a)
    for (int b = a; a + b <= 10; ++b) {
      const auto all = enumerate_compositions(a, b);
      for (const auto& x : all) {
        if (!dominated_by(x, x)) ++axiom_bad;
        for (const auto& y : all) {
          if (x != y && dominated_by(x, y) && dominated_by(y, x)) ++axiom_bad;
          if (!dominated_by(x, y)) continue;
          for (const auto& z : all)
            if (dominated_by(y, z) && !dominated_by(x, z)) ++axiom_bad;
        }
      }
    }
  out.push_back(make("dominance order is reflexive, antisymmetric, transitive",
                     {{"a_plus_b_max", 10}}, "0 violations",
                     std::to_string(axiom_bad) + " violations"));
}

using SuiteFn = void (*)(std::size_t, std::vector<Check>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"sortable", suite_sortable},       {"lemma", suite_lemma},
      {"classes", suite_classes},         {"thm5", suite_thm5},
      {"thm6", suite_thm6},               {"thm4", suite_thm4},
      {"recurrences", suite_recurrences}, {"eq16", suite_eq16},
      {"kernels", suite_kernels},         {"functional", suite_functional},
      {"properties", suite_properties},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

Report run_suite(std::string_view suite, std::size_t cap) {
  Report report{std::string(suite), {}};
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    std::vector<Check> checks;
    try {
      fn(cap, checks);
    } catch (const std::exception& e) {
      checks.push_back({"suite aborted", json::object(), "no error", e.what(), false});
    }
    for (auto& c : checks) {
      if (suite == "all") c.name = name + ": " + c.name;
      report.checks.push_back(std::move(c));
    }
  }
  if (!found) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return report;
}

}  // namespace stacksort
