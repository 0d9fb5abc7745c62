#include "stacksort/stack_sort.hpp"

#include <algorithm>
#include <numeric>

namespace stacksort {

namespace {

void sort_into(std::span<const int> w, std::vector<int>& out) {
  if (w.empty()) return;
  const auto top = std::max_element(w.begin(), w.end());
  const std::size_t at = static_cast<std::size_t>(top - w.begin());
  sort_into(w.first(at), out);
  sort_into(w.subspan(at + 1), out);
  out.push_back(*top);
}

void preimages_into(std::span<const int> w, std::vector<std::vector<int>>& out) {
  if (w.empty()) {
    out.emplace_back();
    return;
  }
  const int top = w.back();
  if (top != *std::max_element(w.begin(), w.end())) return;
  const auto rest = w.first(w.size() - 1);
  for (std::size_t i = 0; i <= rest.size(); ++i) {
    std::vector<std::vector<int>> left, right;
    preimages_into(rest.first(i), left);
    if (left.empty()) continue;
    preimages_into(rest.subspan(i), right);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<int> q = l;
        q.push_back(top);
        q.insert(q.end(), r.begin(), r.end());
        out.push_back(std::move(q));
      }
    }
  }
}

}  // namespace

Permutation sort_once(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.size());
  sort_into(p.entries(), out);
  return Permutation::adopt(std::move(out));
}

Permutation sort_iterate(const Permutation& p, std::size_t t) {
  Permutation q = p;
  for (std::size_t i = 0; i < t && !q.is_increasing(); ++i) q = sort_once(q);
  return q;
}

bool is_t_stack_sortable(const Permutation& p, std::size_t t) {
  return sort_iterate(p, t).is_increasing();
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  do {
    fn(Permutation::adopt(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

std::vector<Permutation> preimages(const Permutation& p) {
  std::vector<std::vector<int>> raw;
  preimages_into(p.entries(), raw);
  std::vector<Permutation> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back(Permutation::adopt(std::move(r)));
  std::sort(out.begin(), out.end());
  return out;
}

BigInt FertilityCounter::count(const Permutation& p) {
  return count_key(normalized_key(p.entries()));
}

BigInt FertilityCounter::count_key(const std::string& key) {
  const std::size_t n = key.size();
  if (n <= 1) return 1;
  // key holds 0-based ranks; the last entry must be the maximum n-1
  if (static_cast<unsigned char>(key.back()) != n - 1) return 0;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto relabel = [](std::string_view part) {
    std::vector<int> vals(part.begin(), part.end());
    return normalized_key(vals);
  };
  const std::string_view rest(key.data(), n - 1);
  BigInt total = 0;
  for (std::size_t i = 0; i <= rest.size(); ++i) {
    const BigInt left = count_key(relabel(rest.substr(0, i)));
    if (left == 0) continue;
    total += left * count_key(relabel(rest.substr(i)));
  }
  memo_.emplace(key, total);
  return total;
}

BigInt fertility(const Permutation& p) {
  thread_local FertilityCounter counter;
  return counter.count(p);
}

BigInt fertility_by_decomposition(const Permutation& p, std::size_t d) {
  const auto tbd = tail_bound_descents(p);
  if (std::find(tbd.begin(), tbd.end(), d) == tbd.end())
    throw std::invalid_argument("fertility_by_decomposition: " + std::to_string(d) +
                                " is not a tail-bound descent of " + to_string(p));
  BigInt total = 0;
  for (const Hook& h : hooks_from(p, d)) {
    const HookSplit parts = split_by_hook(p, h);
    total += fertility(parts.unsheltered) * fertility(parts.sheltered);
  }
  return total;
}

BigInt count_t_sortable(std::size_t n, std::size_t t, std::size_t cap) {
  check_cap(n, cap);
  BigInt count = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    if (is_t_stack_sortable(p, t)) ++count;
  });
  return count;
}

}  // namespace stacksort
