#include "stacksort/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stacksort {

VincularPattern::VincularPattern(Permutation pattern, std::set<std::size_t> bonds)
    : pattern_(std::move(pattern)), bonds_(std::move(bonds)) {
  if (!pattern_.is_normalized())
    throw std::invalid_argument("pattern must be normalized");
  for (std::size_t b : bonds_)
    if (b < 1 || b + 1 > pattern_.size())
      throw std::invalid_argument("bond index out of range");
}

namespace {

// Backtracking over index tuples. `visit` returns true to stop the search.
class Matcher {
 public:
  Matcher(const Permutation& host, const VincularPattern& pat)
      : host_(host), pat_(pat), chosen_(pat.size()) {}

  bool run(bool anchor_last, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    anchor_last_ = anchor_last;
    visit_ = &visit;
    if (pat_.size() == 0) return visit(chosen_);
    if (pat_.size() > host_.size()) return false;
    return place(0, 0);
  }

 private:
  bool consistent(std::size_t t, std::size_t idx) const {
    const int hv = host_[idx];
    const int pv = pat_.pattern()[t];
    for (std::size_t s = 0; s < t; ++s) {
      const bool host_less = host_[chosen_[s]] < hv;
      const bool pat_less = pat_.pattern()[s] < pv;
      if (host_less != pat_less) return false;
    }
    return true;
  }

  bool place(std::size_t t, std::size_t from) {
    const std::size_t m = pat_.size();
    const std::size_t n = host_.size();
    if (t == m) return (*visit_)(chosen_);
    std::size_t lo = from;
    std::size_t hi = n - (m - t);  // leave room for the remaining positions
    if (t > 0 && pat_.bonded_after(t - 1)) hi = std::min(hi, lo);
    if (anchor_last_ && t + 1 == m) lo = std::max(lo, n - 1);
    for (std::size_t idx = lo; idx <= hi && idx < n; ++idx) {
      if (!consistent(t, idx)) continue;
      chosen_[t] = idx;
      if (place(t + 1, idx + 1)) return true;
    }
    return false;
  }

  const Permutation& host_;
  const VincularPattern& pat_;
  std::vector<std::size_t> chosen_;
  bool anchor_last_ = false;
  const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
};

}  // namespace

bool contains(const Permutation& host, const VincularPattern& pat) {
  return Matcher(host, pat).run(false, [](const auto&) { return true; });
}

bool contains_ending_at_last(const Permutation& host, const VincularPattern& pat) {
  if (host.empty()) return pat.size() == 0;
  return Matcher(host, pat).run(true, [](const auto&) { return true; });
}

bool avoids_all(const Permutation& host, std::span<const VincularPattern> pats) {
  return std::none_of(pats.begin(), pats.end(),
                      [&](const VincularPattern& p) { return contains(host, p); });
}

std::vector<std::vector<std::size_t>> occurrences(const Permutation& host,
                                                  const VincularPattern& pat) {
  std::vector<std::vector<std::size_t>> out;
  Matcher(host, pat).run(false, [&](const std::vector<std::size_t>& idx) {
    out.push_back(idx);
    return false;
  });
  return out;
}

bool every_occurrence_extends(const Permutation& host, const VincularPattern& inner,
                              const VincularPattern& outer, std::size_t inserted) {
  const std::size_t m = inner.size();
  if (outer.size() != m + 1 || inserted > m)
    throw std::invalid_argument("every_occurrence_extends: outer must have one more entry");
  std::vector<int> reduced = outer.pattern().vec();
  reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(inserted));
  if (normalize(Permutation::adopt(reduced)) != inner.pattern())
    throw std::invalid_argument("every_occurrence_extends: outer does not reduce to inner");
  const int role = outer.pattern()[inserted];
  for (const auto& occ : occurrences(host, inner)) {
    const std::size_t lo = inserted == 0 ? 0 : occ[inserted - 1] + 1;
    const std::size_t hi = inserted == m ? host.size() : occ[inserted];
    bool extended = false;
    for (std::size_t e = lo; e < hi && !extended; ++e) {
      // The extra entry must sit exactly where `role` sits among the values.
      bool fits = true;
      for (std::size_t t = 0; t < m && fits; ++t) {
        const int outer_value = outer.pattern()[t < inserted ? t : t + 1];
        fits = (host[occ[t]] < host[e]) == (outer_value < role);
      }
      extended = fits;
    }
    if (!extended) return false;
  }
  return true;
}

std::string to_string(const VincularPattern& pat) {
  std::string out;
  const std::size_t m = pat.size();
  bool open = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (i) out += ' ';
    if (!open && pat.bonded_after(i)) {
      out += '[';
      open = true;
    }
    out += std::to_string(pat.pattern()[i]);
    if (open && !pat.bonded_after(i)) {
      out += ']';
      open = false;
    }
  }
  return out;
}

}  // namespace stacksort
