#pragma once

#include <cstddef>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// A hook from the plot point (sw, p_sw) up and then right to (ne, p_ne).
/// Positions are 1-based; legal iff sw < ne and p_sw < p_ne.
struct Hook {
  std::size_t sw = 0;
  std::size_t ne = 0;

  bool operator==(const Hook&) const = default;
};

bool is_legal(const Permutation& p, const Hook& h);

/// All legal hooks with southwest endpoint at position i, ordered by ne.
std::vector<Hook> hooks_from(const Permutation& p, std::size_t i);

/// Descents d such that every hook from d ends on a tail point. p normalized.
std::vector<std::size_t> tail_bound_descents(const Permutation& p);

struct HookSplit {
  Permutation unsheltered;  // p_1..p_sw p_{ne+1}..p_n
  Permutation sheltered;    // p_{sw+1}..p_{ne-1}
};

/// Throws std::invalid_argument for an illegal hook.
HookSplit split_by_hook(const Permutation& p, const Hook& h);

}  // namespace stacksort
