#include "stacksort/hooks.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacksort {

bool is_legal(const Permutation& p, const Hook& h) {
  return h.sw >= 1 && h.sw < h.ne && h.ne <= p.size() && p[h.sw - 1] < p[h.ne - 1];
}

std::vector<Hook> hooks_from(const Permutation& p, std::size_t i) {
  std::vector<Hook> out;
  if (i < 1 || i > p.size()) return out;
  for (std::size_t j = i + 1; j <= p.size(); ++j)
    if (p[i - 1] < p[j - 1]) out.push_back({i, j});
  return out;
}

std::vector<std::size_t> tail_bound_descents(const Permutation& p) {
  const std::size_t n = p.size();
  const std::size_t tail_start = n - tail_length(p) + 1;  // first tail position
  std::vector<std::size_t> out;
  for (std::size_t d : descents(p)) {
    const auto hooks = hooks_from(p, d);
    if (std::all_of(hooks.begin(), hooks.end(),
                    [&](const Hook& h) { return h.ne >= tail_start; }))
      out.push_back(d);
  }
  return out;
}

HookSplit split_by_hook(const Permutation& p, const Hook& h) {
  if (!is_legal(p, h)) throw std::invalid_argument("split_by_hook: illegal hook");
  const auto& e = p.vec();
  std::vector<int> unsheltered(e.begin(), e.begin() + h.sw);
  unsheltered.insert(unsheltered.end(), e.begin() + h.ne, e.end());
  std::vector<int> sheltered(e.begin() + h.sw, e.begin() + (h.ne - 1));
  return {Permutation::adopt(std::move(unsheltered)), Permutation::adopt(std::move(sheltered))};
}

}  // namespace stacksort
