#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacksort {

/// A permutation in one-line notation: a finite sequence of distinct positive
/// integers. The entry set need not be {1..n}; subsequences such as the parts
/// cut out by a hook are kept with their original values.
///
/// Positions exposed by the statistics below (descents, hook endpoints) are
/// 1-based, as in the usual combinatorial notation. operator[] is 0-based.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument on a non-positive or repeated entry.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  /// Skips validation. Callers guarantee distinct positive entries.
  static Permutation adopt(std::vector<int> entries) {
    Permutation p;
    p.entries_ = std::move(entries);
    return p;
  }

  static Permutation identity(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vec() const { return entries_; }

  /// Entry set is exactly {1, ..., n}.
  bool is_normalized() const;
  bool is_increasing() const;
  int max_entry() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// Replaces the i-th smallest entry with i.
Permutation normalize(const Permutation& p);

/// Relative order of a sequence of distinct values, packed one byte per entry.
/// Used as a memo key; entries must be < 256 after normalization.
std::string normalized_key(std::span<const int> values);

std::vector<std::size_t> descents(const Permutation& p);
std::size_t des(const Permutation& p);
std::size_t peaks(const Permutation& p);

/// Length of the maximal terminal run of fixed points n-l+1, ..., n; n for the
/// identity. Requires a normalized permutation.
std::size_t tail_length(const Permutation& p);

/// Number of right-to-left maxima.
std::size_t rmax(const Permutation& p);

/// Largest m such that n, n-1, ..., n-m+1 occur in decreasing order. Requires a
/// normalized, nonempty permutation.
std::size_t zeil(const Permutation& p);

std::string to_string(const Permutation& p);

}  // namespace stacksort
