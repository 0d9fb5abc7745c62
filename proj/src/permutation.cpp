#include "stacksort/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace stacksort {

namespace {

void require_normalized(const Permutation& p, const char* what) {
  if (!p.is_normalized())
    throw std::invalid_argument(std::string(what) + ": permutation is not normalized");
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<int> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 1)
    throw std::invalid_argument("permutation entries must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("permutation entries must be distinct");
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return adopt(std::move(e));
}

bool Permutation::is_normalized() const {
  const int n = static_cast<int>(entries_.size());
  return std::all_of(entries_.begin(), entries_.end(),
                     [n](int v) { return v >= 1 && v <= n; });
}

bool Permutation::is_increasing() const {
  return std::is_sorted(entries_.begin(), entries_.end());
}

int Permutation::max_entry() const {
  if (entries_.empty()) throw std::logic_error("max_entry of the empty permutation");
  return *std::max_element(entries_.begin(), entries_.end());
}

Permutation normalize(const Permutation& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  std::vector<int> out(p.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    out[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation::adopt(std::move(out));
}

std::string normalized_key(std::span<const int> values) {
  std::string key(values.size(), '\0');
  for (std::size_t i = 0; i < values.size(); ++i) {
    unsigned char rank = 0;
    for (std::size_t j = 0; j < values.size(); ++j)
      if (values[j] < values[i]) ++rank;
    key[i] = static_cast<char>(rank);
  }
  return key;
}

std::vector<std::size_t> descents(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) out.push_back(i + 1);
  return out;
}

std::size_t des(const Permutation& p) { return descents(p).size(); }

std::size_t peaks(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (p[i - 1] < p[i] && p[i] > p[i + 1]) ++count;
  return count;
}

std::size_t tail_length(const Permutation& p) {
  require_normalized(p, "tail_length");
  const std::size_t n = p.size();
  std::size_t l = 0;
  while (l < n && p[n - 1 - l] == static_cast<int>(n - l)) ++l;
  return l;
}

std::size_t rmax(const Permutation& p) {
  std::size_t count = 0;
  int best = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] > best) {
      best = p[i];
      ++count;
    }
  }
  return count;
}

std::size_t zeil(const Permutation& p) {
  require_normalized(p, "zeil");
  if (p.empty()) throw std::invalid_argument("zeil: empty permutation");
  const int n = static_cast<int>(p.size());
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = i;
  std::size_t m = 1;
  while (static_cast<int>(m) < n && pos[n - m] > pos[n - m + 1]) ++m;
  return m;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace stacksort
