#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stacksort/numbers.hpp"
#include "stacksort/pattern.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/stack_sort.hpp"

namespace stacksort {

/// Av(forbidden...): normalized permutations avoiding every listed pattern.
struct ClassSpec {
  std::vector<VincularPattern> forbidden;

  static ClassSpec classical(std::initializer_list<Permutation> patterns);
};

std::string to_string(const ClassSpec& spec);

/// Av_n(spec) in lexicographic order, by prefix-pruned backtracking.
std::vector<Permutation> enumerate_class(std::size_t n, const ClassSpec& spec,
                                         std::size_t cap = kDefaultCap);

/// |s^{-1}(Av_n(spec))| as the sum of member fertilities.
BigInt class_fertility(std::size_t n, const ClassSpec& spec, std::size_t cap = kDefaultCap);

/// The same number counted forward: |{sigma in S_n : s(sigma) in Av_n(spec)}|.
BigInt class_fertility_forward(std::size_t n, const ClassSpec& spec,
                               std::size_t cap = kDefaultCap);

/// West: avoids 2341, and every 3241 is part of a 35241.
bool is_west_2ss(const Permutation& sigma);

/// s(sigma) avoids 132 iff sigma avoids 1342 and every 3142 is part of a 34152
/// or a 35142.
bool in_preimage_av132(const Permutation& sigma);

/// First sigma in S_n (lexicographic) on which "s(sigma) in Av(lhs)" and
/// "sigma in Av(rhs)" disagree.
std::optional<Permutation> class_equality_counterexample(std::size_t n, const ClassSpec& lhs,
                                                         const ClassSpec& rhs,
                                                         std::size_t cap = kDefaultCap);

/// s^{-1}(Av_n(lhs)) == Av_n(rhs) as sets.
bool verify_class_equality(std::size_t n, const ClassSpec& lhs, const ClassSpec& rhs,
                           std::size_t cap = kDefaultCap);

/// The three class families whose preimages are counted by tail length.
enum class Flavor { kAv231_321, kAv132_231, kAv231_312_321 };

ClassSpec flavor_class(Flavor f);
std::string to_string(Flavor f);

struct CountKey {
  int ell = 0;
  int n = 0;
  int k = 0;  // descents of the target; always 0 unless the table is refined
  auto operator<=>(const CountKey&) const = default;
};

/// B_l(n) = |s^{-1}(D_l(n))| and B_{>=l}(n), where D_l(n) (D_{>=l}(n)) is the
/// set of class members of length n + l with tail length exactly (at least) l.
/// The descent-refined family also splits by k = des.
struct RefinedCountTable {
  Flavor flavor = Flavor::kAv231_321;
  bool by_descents = false;
  std::map<CountKey, BigInt> exact;
  std::map<CountKey, BigInt> at_least;

  std::optional<BigInt> exact_at(int ell, int n, int k = 0) const;
  std::optional<BigInt> at_least_at(int ell, int n, int k = 0) const;
};

/// Brute-force table: every (l, n[, k]) with n + l <= max_length, by
/// enumerating the class and summing fertilities.
RefinedCountTable refined_counts_brute(Flavor flavor, std::size_t max_length,
                                       std::size_t cap = kDefaultCap);

/// Tail-length recurrence for s^{-1}(Av(231,321)):
///   B_l(n+1) = sum_{i=1..n} sum_{j=1..l} C_{i+j-1} B_{>=l-j+1}(n-i).
RefinedCountTable recurrence_av231_321(std::size_t ell_max, std::size_t n_max);

/// Tail-length recurrence for s^{-1}(Av(132,231)), with B_l(1) = 0:
///   B_l(n+1) = sum_{j=1..l} C_{l-j+1} B_{>=j-1}(n)   for n >= 1.
RefinedCountTable recurrence_av132_231(std::size_t ell_max, std::size_t n_max);

/// Descent-refined recurrence for s^{-1}(Av(231,312,321)), B_l(1,k) = 0:
///   B_l(n+1,k) = sum_{j=1..l} B_{>=l-j+1}(n-1,k-1) C_j   for n >= 1.
RefinedCountTable recurrence_av231_312_321(std::size_t ell_max, std::size_t n_max,
                                           std::size_t k_max);

/// binom(n-k-1, k) binom(2n-2k, n) / (n+1), computed as a rational; throws
/// std::logic_error if it fails to be an integer. Requires n >= 1, k >= 0.
BigInt descent_refined_closed_form(long n, long k);

/// Brute force |s^{-1}(Av_{n,k}(231,312,321))|.
BigInt descent_refined_brute(std::size_t n, std::size_t k, std::size_t cap = kDefaultCap);

struct TableComparison {
  std::size_t compared = 0;
  std::vector<CountKey> mismatches;
  bool ok() const { return compared > 0 && mismatches.empty(); }
};

/// Compares the keys present in both maps, restricted to n + l <= max_total
/// when max_total >= 0.
TableComparison compare_tables(const std::map<CountKey, BigInt>& a,
                               const std::map<CountKey, BigInt>& b, int max_total = -1);

}  // namespace stacksort
