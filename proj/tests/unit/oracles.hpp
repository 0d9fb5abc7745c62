#pragma once
// Slow, obviously-correct reference implementations. Nothing here calls into
// the library's algorithms except to build inputs.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "stacksort/numbers.hpp"
#include "stacksort/permutation.hpp"

namespace oracle {

using stacksort::BigInt;
using stacksort::Permutation;
using stacksort::Rational;

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// One pass through a stack: before pushing x, pop everything smaller than x.
inline std::vector<int> stack_sort(const std::vector<int>& p) {
  std::vector<int> stack, out;
  for (int x : p) {
    while (!stack.empty() && stack.back() < x) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return out;
}

inline std::vector<int> normalize(const std::vector<int>& p) {
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int x : p)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) -
                                   sorted.begin()) + 1);
  return out;
}

// Tries every index subset of the right size. bonds are 1-based left indices.
inline bool contains(const std::vector<int>& host, const std::vector<int>& pat,
                     const std::set<int>& bonds = {}) {
  const int n = static_cast<int>(host.size());
  const int m = static_cast<int>(pat.size());
  if (m > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    std::vector<int> idx, vals;
    for (int i = 0; i < n; ++i)
      if (pick[i]) {
        idx.push_back(i);
        vals.push_back(host[i]);
      }
    bool ok = normalize(vals) == pat;
    for (int b : bonds) ok = ok && idx[b] == idx[b - 1] + 1;
    if (ok) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline std::vector<std::vector<int>> preimages_by_forward_map(const std::vector<int>& target) {
  std::vector<std::vector<int>> out;
  for (const auto& q : all_perms(static_cast<int>(target.size())))
    if (stack_sort(q) == target) out.push_back(q);
  return out;
}

inline BigInt catalan(int n) {
  std::vector<BigInt> c{1};
  for (int m = 0; m < n; ++m) {
    BigInt next = 0;
    for (int i = 0; i <= m; ++i) next += c[i] * c[m - i];
    c.push_back(next);
  }
  return c[n];
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Coefficients of (1 + a x)^(1/2) via the generalized binomial series.
inline std::vector<Rational> sqrt_one_plus(const Rational& a, int order) {
  std::vector<Rational> out;
  Rational binom = 1;
  Rational power = 1;
  for (int n = 0; n <= order; ++n) {
    out.push_back(binom * power);
    binom = binom * (Rational(1, 2) - n) / (n + 1);
    power *= a;
  }
  return out;
}

inline int zeil(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  int want = n;
  for (int i = 0; i < n && want > 0; ++i)
    if (p[i] == want) --want;
  return n - want;
}

}  // namespace oracle
