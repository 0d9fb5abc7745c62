#include "stacksort/classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stacksort/text.hpp"

namespace stacksort {

ClassSpec ClassSpec::classical(std::initializer_list<Permutation> patterns) {
  ClassSpec spec;
  for (const auto& p : patterns) spec.forbidden.emplace_back(p);
  return spec;
}

std::string to_string(const ClassSpec& spec) {
  std::string out = "Av(";
  for (std::size_t i = 0; i < spec.forbidden.size(); ++i) {
    if (i) out += ", ";
    out += to_string(spec.forbidden[i]);
  }
  return out + ")";
}

namespace {

void extend(std::size_t n, const ClassSpec& spec, std::vector<int>& prefix,
            std::vector<bool>& used, std::vector<Permutation>& out) {
  if (prefix.size() == n) {
    out.push_back(Permutation::adopt(prefix));
    return;
  }
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    if (used[v]) continue;
    prefix.push_back(v);
    // Any occurrence in a prefix survives in every completion, so it is enough
    // to look at occurrences that use the newest entry.
    const Permutation host = Permutation::adopt(prefix);
    const bool ok = std::none_of(spec.forbidden.begin(), spec.forbidden.end(),
                                 [&](const VincularPattern& pat) {
                                   return contains_ending_at_last(host, pat);
                                 });
    if (ok) {
      used[v] = true;
      extend(n, spec, prefix, used, out);
      used[v] = false;
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Permutation> enumerate_class(std::size_t n, const ClassSpec& spec,
                                         std::size_t cap) {
  check_cap(n, cap);
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<bool> used(n + 1, false);
  extend(n, spec, prefix, used, out);
  return out;
}

BigInt class_fertility(std::size_t n, const ClassSpec& spec, std::size_t cap) {
  BigInt total = 0;
  for (const auto& p : enumerate_class(n, spec, cap)) total += fertility(p);
  return total;
}

BigInt class_fertility_forward(std::size_t n, const ClassSpec& spec, std::size_t cap) {
  check_cap(n, cap);
  BigInt total = 0;
  for_each_permutation(n, [&](const Permutation& sigma) {
    if (avoids_all(sort_once(sigma), spec.forbidden)) ++total;
  });
  return total;
}

bool is_west_2ss(const Permutation& sigma) {
  static const VincularPattern p2341(Permutation{2, 3, 4, 1});
  static const VincularPattern p3241(Permutation{3, 2, 4, 1});
  static const VincularPattern p35241(Permutation{3, 5, 2, 4, 1});
  // the exempting entry is the "5", between the "3" and the "2"
  return !contains(sigma, p2341) && every_occurrence_extends(sigma, p3241, p35241, 1);
}

bool in_preimage_av132(const Permutation& sigma) {
  static const VincularPattern p1342(Permutation{1, 3, 4, 2});
  static const VincularPattern p3142(Permutation{3, 1, 4, 2});
  if (contains(sigma, p1342)) return false;
  // A 3142 occurrence is harmless when it is the 3152 of a 34152 or the 3142
  // of a 35142: some entry between the "3" and the "1" exceeds the "3".
  for (const auto& occ : occurrences(sigma, p3142)) {
    bool exempt = false;
    for (std::size_t e = occ[0] + 1; e < occ[1] && !exempt; ++e)
      exempt = sigma[e] > sigma[occ[0]];
    if (!exempt) return false;
  }
  return true;
}

std::optional<Permutation> class_equality_counterexample(std::size_t n, const ClassSpec& lhs,
                                                         const ClassSpec& rhs,
                                                         std::size_t cap) {
  check_cap(n, cap);
  std::optional<Permutation> witness;
  for_each_permutation(n, [&](const Permutation& sigma) {
    if (witness) return;
    const bool in_lhs = avoids_all(sort_once(sigma), lhs.forbidden);
    const bool in_rhs = avoids_all(sigma, rhs.forbidden);
    if (in_lhs != in_rhs) witness = sigma;
  });
  return witness;
}

bool verify_class_equality(std::size_t n, const ClassSpec& lhs, const ClassSpec& rhs,
                           std::size_t cap) {
  return !class_equality_counterexample(n, lhs, rhs, cap).has_value();
}

ClassSpec flavor_class(Flavor f) {
  switch (f) {
    case Flavor::kAv231_321:
      return ClassSpec::classical({{2, 3, 1}, {3, 2, 1}});
    case Flavor::kAv132_231:
      return ClassSpec::classical({{1, 3, 2}, {2, 3, 1}});
    case Flavor::kAv231_312_321:
      return ClassSpec::classical({{2, 3, 1}, {3, 1, 2}, {3, 2, 1}});
  }
  throw std::logic_error("unknown flavor");
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::kAv231_321: return "231,321";
    case Flavor::kAv132_231: return "132,231";
    case Flavor::kAv231_312_321: return "231,312,321";
  }
  return "?";
}

std::optional<BigInt> RefinedCountTable::exact_at(int ell, int n, int k) const {
  auto it = exact.find({ell, n, k});
  if (it == exact.end()) return std::nullopt;
  return it->second;
}

std::optional<BigInt> RefinedCountTable::at_least_at(int ell, int n, int k) const {
  auto it = at_least.find({ell, n, k});
  if (it == at_least.end()) return std::nullopt;
  return it->second;
}

RefinedCountTable refined_counts_brute(Flavor flavor, std::size_t max_length,
                                       std::size_t cap) {
  check_cap(max_length, cap);
  RefinedCountTable t;
  t.flavor = flavor;
  t.by_descents = flavor == Flavor::kAv231_312_321;
  const int L = static_cast<int>(max_length);
  const int k_top = t.by_descents ? L : 0;
  for (int len = 0; len <= L; ++len)
    for (int ell = 0; ell <= len; ++ell)
      for (int k = 0; k <= k_top; ++k) {
        t.exact[{ell, len - ell, k}] = 0;
        t.at_least[{ell, len - ell, k}] = 0;
      }
  const ClassSpec spec = flavor_class(flavor);
  for (int len = 0; len <= L; ++len) {
    for (const auto& p : enumerate_class(len, spec, cap)) {
      const BigInt f = fertility(p);
      if (f == 0) continue;
      const int tl = static_cast<int>(tail_length(p));
      const int k = t.by_descents ? static_cast<int>(des(p)) : 0;
      t.exact[{tl, len - tl, k}] += f;
      for (int ell = 0; ell <= tl; ++ell) t.at_least[{ell, len - ell, k}] += f;
    }
  }
  return t;
}

namespace {

// Dense (l, n[, k]) grids used while running a recurrence. Level n holds
// l <= top - n so that shifted lookups never leave the computed region.
struct Grid {
  int top = 0;
  int kdim = 1;
  std::vector<BigInt> cells;

  Grid(int top, int kdim)
      : top(top), kdim(kdim), cells(static_cast<std::size_t>((top + 1) * (top + 1) * kdim)) {}

  BigInt& at(int ell, int n, int k = 0) {
    if (ell < 0 || n < 0 || k < 0 || k >= kdim || ell + n > top)
      throw std::logic_error("recurrence read outside its computed region");
    return cells[static_cast<std::size_t>((ell * (top + 1) + n) * kdim + k)];
  }
};

RefinedCountTable export_grid(Flavor flavor, bool by_descents, Grid& exact, Grid& at_least,
                              int ell_max, int n_max) {
  RefinedCountTable t;
  t.flavor = flavor;
  t.by_descents = by_descents;
  for (int ell = 0; ell <= ell_max; ++ell)
    for (int n = 0; n <= n_max; ++n)
      for (int k = 0; k < exact.kdim; ++k) {
        t.exact[{ell, n, k}] = exact.at(ell, n, k);
        t.at_least[{ell, n, k}] = at_least.at(ell, n, k);
      }
  return t;
}

}  // namespace

RefinedCountTable recurrence_av231_321(std::size_t ell_max, std::size_t n_max) {
  const int lm = static_cast<int>(ell_max), nm = static_cast<int>(n_max);
  const int top = lm + nm;
  Grid exact(top, 1), at_least(top, 1);
  for (int ell = 0; ell <= top; ++ell) exact.at(ell, 0) = at_least.at(ell, 0) = catalan(ell);
  for (int m = 1; m <= nm; ++m) {
    const int n = m - 1;
    for (int ell = 0; ell <= top - m; ++ell) {
      BigInt sum = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= ell; ++j)
          sum += catalan(i + j - 1) * at_least.at(ell - j + 1, n - i);
      exact.at(ell, m) = sum;
      at_least.at(ell, m) = sum + at_least.at(ell + 1, m - 1);
    }
  }
  return export_grid(Flavor::kAv231_321, false, exact, at_least, lm, nm);
}

RefinedCountTable recurrence_av132_231(std::size_t ell_max, std::size_t n_max) {
  const int lm = static_cast<int>(ell_max), nm = static_cast<int>(n_max);
  const int top = lm + nm;
  Grid exact(top, 1), at_least(top, 1);
  for (int ell = 0; ell <= top; ++ell) exact.at(ell, 0) = at_least.at(ell, 0) = catalan(ell);
  for (int m = 1; m <= nm; ++m) {
    const int n = m - 1;
    for (int ell = 0; ell <= top - m; ++ell) {
      BigInt sum = 0;
      if (n >= 1)
        for (int j = 1; j <= ell; ++j) sum += catalan(ell - j + 1) * at_least.at(j - 1, n);
      exact.at(ell, m) = sum;
      at_least.at(ell, m) = sum + at_least.at(ell + 1, m - 1);
    }
  }
  return export_grid(Flavor::kAv132_231, false, exact, at_least, lm, nm);
}

RefinedCountTable recurrence_av231_312_321(std::size_t ell_max, std::size_t n_max,
                                           std::size_t k_max) {
  const int lm = static_cast<int>(ell_max), nm = static_cast<int>(n_max);
  const int kd = static_cast<int>(k_max) + 1;
  const int top = lm + nm;
  Grid exact(top, kd), at_least(top, kd);
  for (int ell = 0; ell <= top; ++ell)
    exact.at(ell, 0, 0) = at_least.at(ell, 0, 0) = catalan(ell);
  for (int m = 1; m <= nm; ++m) {
    const int n = m - 1;
    for (int ell = 0; ell <= top - m; ++ell)
      for (int k = 0; k < kd; ++k) {
        BigInt sum = 0;
        if (n >= 1 && k >= 1)
          for (int j = 1; j <= ell; ++j)
            sum += at_least.at(ell - j + 1, n - 1, k - 1) * catalan(j);
        exact.at(ell, m, k) = sum;
        at_least.at(ell, m, k) = sum + at_least.at(ell + 1, m - 1, k);
      }
  }
  return export_grid(Flavor::kAv231_312_321, true, exact, at_least, lm, nm);
}

BigInt descent_refined_closed_form(long n, long k) {
  if (n < 1 || k < 0) throw std::domain_error("descent_refined_closed_form: need n >= 1, k >= 0");
  const Rational value =
      Rational(binomial(n - k - 1, k) * binomial(2 * n - 2 * k, n), BigInt(n + 1));
  if (boost::multiprecision::denominator(value) != 1)
    throw std::logic_error("descent_refined_closed_form: non-integral value " + to_string(value));
  return boost::multiprecision::numerator(value);
}

BigInt descent_refined_brute(std::size_t n, std::size_t k, std::size_t cap) {
  BigInt total = 0;
  for (const auto& p : enumerate_class(n, flavor_class(Flavor::kAv231_312_321), cap))
    if (des(p) == k) total += fertility(p);
  return total;
}

TableComparison compare_tables(const std::map<CountKey, BigInt>& a,
                               const std::map<CountKey, BigInt>& b, int max_total) {
  TableComparison out;
  for (const auto& [key, value] : a) {
    if (max_total >= 0 && key.ell + key.n > max_total) continue;
    auto it = b.find(key);
    if (it == b.end()) continue;
    ++out.compared;
    if (it->second != value) out.mismatches.push_back(key);
  }
  return out;
}

}  // namespace stacksort
