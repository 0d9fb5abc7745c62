#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stacksort/numbers.hpp"

namespace stacksort {

/// An a-tuple of positive integers summing to b.
class Composition {
 public:
  /// Throws std::invalid_argument on an empty tuple or a part < 1.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t num_parts() const { return parts_.size(); }
  int total() const;
  std::vector<int> prefix_sums() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing parts, no zeros.
using Partition = std::vector<int>;

std::string to_string(const Composition& c);
std::string to_string(const Partition& p);

/// Comp_a(b) in lexicographic order; empty when b < a or a < 1.
std::vector<Composition> enumerate_compositions(int a, int b);

/// y is dominated by x: every prefix sum of y is at most that of x. Throws
/// std::invalid_argument when the part counts or totals differ.
bool dominated_by(const Composition& y, const Composition& x);

/// D_x = #{y in Comp_a(b) : y dominated by x}, by a DP over prefix sums.
BigInt d_of(const Composition& x);
/// The same count by enumerating Comp_a(b).
BigInt d_of_oracle(const Composition& x);

/// (x_i - 1) parts of size a - i for i = 1..a-1. The order ideal below psi(x)
/// in Young's lattice is in bijection with {y : y dominated by x}.
Partition psi(const Composition& x);

/// Number of partitions whose diagrams fit inside lambda, the empty one included.
BigInt count_subdiagrams(const Partition& lambda);

/// C_x = product of the Catalan numbers of the parts.
BigInt catalan_product(const Composition& x);

struct CompositionIdentity {
  BigInt composition_sum;  // sum over q in Comp_{k+1}(n-k) of C_q D_q
  BigInt closed_form;      // binom(n-k-1,k) binom(2n-2k,n) / (n+1)
  BigInt recurrence;       // B_{>=0}(n,k) from the descent-refined recurrence
  bool holds() const { return composition_sum == closed_form && closed_form == recurrence; }
};

/// Evaluates all three sides for n >= 1, k >= 0.
CompositionIdentity composition_identity(int n, int k);
bool verify_composition_identity(int n, int k);

}  // namespace stacksort
