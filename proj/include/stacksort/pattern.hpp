#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// A classical pattern plus adjacency bonds. Bond i (1-based, 1 <= i < m)
/// forces pattern positions i and i+1 onto adjacent host positions; an
/// underlined block of length r is r-1 consecutive bonds.
class VincularPattern {
 public:
  VincularPattern() = default;
  explicit VincularPattern(Permutation pattern, std::set<std::size_t> bonds = {});

  const Permutation& pattern() const { return pattern_; }
  const std::set<std::size_t>& bonds() const { return bonds_; }
  std::size_t size() const { return pattern_.size(); }
  bool is_classical() const { return bonds_.empty(); }

  /// 0-based: true when pattern positions p and p+1 must be adjacent.
  bool bonded_after(std::size_t p) const { return bonds_.count(p + 1) != 0; }

  bool operator==(const VincularPattern&) const = default;

 private:
  Permutation pattern_;
  std::set<std::size_t> bonds_;
};

/// Some index tuple i_1 < ... < i_m of host is order-isomorphic to the pattern
/// and respects every bond.
bool contains(const Permutation& host, const VincularPattern& pat);

/// Restricts the search to occurrences whose last pattern position sits on the
/// last host entry.
bool contains_ending_at_last(const Permutation& host, const VincularPattern& pat);

bool avoids_all(const Permutation& host, std::span<const VincularPattern> pats);

/// Every occurrence, as 0-based index tuples in lexicographic order.
std::vector<std::vector<std::size_t>> occurrences(const Permutation& host,
                                                  const VincularPattern& pat);

/// True when every occurrence of `inner` in host extends to an occurrence of
/// `outer` by one extra host entry playing outer's position `inserted`
/// (0-based), the inner entries keeping their roles. Deleting position
/// `inserted` from outer must leave inner; throws std::invalid_argument if not.
bool every_occurrence_extends(const Permutation& host, const VincularPattern& inner,
                              const VincularPattern& outer, std::size_t inserted);

std::string to_string(const VincularPattern& pat);

}  // namespace stacksort
