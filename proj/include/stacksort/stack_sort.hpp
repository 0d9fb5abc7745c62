#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "stacksort/hooks.hpp"
#include "stacksort/numbers.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

/// Largest n for which exhaustive scans over S_n run unless the caller asks
/// for more.
inline constexpr std::size_t kDefaultCap = 8;

struct CapExceeded : std::length_error {
  CapExceeded(std::size_t n, std::size_t cap)
      : std::length_error("n = " + std::to_string(n) + " exceeds the brute-force cap " +
                          std::to_string(cap)),
        n(n),
        cap(cap) {}
  std::size_t n;
  std::size_t cap;
};

inline void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(n, cap);
}

/// West's stack-sorting map: s(L m R) = s(L) s(R) m with m the largest entry.
Permutation sort_once(const Permutation& p);
Permutation sort_iterate(const Permutation& p, std::size_t t);
bool is_t_stack_sortable(const Permutation& p, std::size_t t);

/// Calls fn on every permutation of {1..n} in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn);

/// The exact preimage set s^{-1}(p) over the entry set of p, sorted
/// lexicographically. Empty when the last entry of p is not its maximum.
std::vector<Permutation> preimages(const Permutation& p);

/// Counts preimages with the same split recursion as preimages(), memoized on
/// the relative order of each subword. Not thread-safe; use one per thread.
class FertilityCounter {
 public:
  BigInt count(const Permutation& p);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  BigInt count_key(const std::string& key);
  std::unordered_map<std::string, BigInt> memo_;
};

/// |s^{-1}(p)|, through a thread-local FertilityCounter.
BigInt fertility(const Permutation& p);

/// Sum over hooks H from descent d of fertility(unsheltered) * fertility(sheltered).
/// Throws std::invalid_argument unless d is a tail-bound descent of p.
BigInt fertility_by_decomposition(const Permutation& p, std::size_t d);

/// W_t(n): number of t-stack-sortable permutations in S_n, by exhaustive scan.
BigInt count_t_sortable(std::size_t n, std::size_t t, std::size_t cap = kDefaultCap);

}  // namespace stacksort
