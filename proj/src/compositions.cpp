#include "stacksort/compositions.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "stacksort/classes.hpp"

namespace stacksort {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Composition::prefix_sums() const {
  std::vector<int> out(parts_.size());
  std::partial_sum(parts_.begin(), parts_.end(), out.begin());
  return out;
}

std::string to_string(const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.parts()[i]);
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

namespace {

void fill(int a, int remaining, std::vector<int>& parts, std::vector<Composition>& out) {
  const int left = a - static_cast<int>(parts.size());
  if (left == 1) {
    parts.push_back(remaining);
    out.emplace_back(parts);
    parts.pop_back();
    return;
  }
  for (int first = 1; first <= remaining - (left - 1); ++first) {
    parts.push_back(first);
    fill(a, remaining - first, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int a, int b) {
  std::vector<Composition> out;
  if (a < 1 || b < a) return out;
  std::vector<int> parts;
  fill(a, b, parts, out);
  return out;
}

bool dominated_by(const Composition& y, const Composition& x) {
  if (y.num_parts() != x.num_parts() || y.total() != x.total())
    throw std::invalid_argument("dominated_by: compositions of different shapes");
  const auto py = y.prefix_sums(), px = x.prefix_sums();
  for (std::size_t i = 0; i < py.size(); ++i)
    if (py[i] > px[i]) return false;
  return true;
}

BigInt d_of(const Composition& x) {
  const auto caps = x.prefix_sums();
  const int b = x.total();
  // ways[s]: number of admissible prefixes y_1..y_t with sum s
  std::map<int, BigInt> ways{{0, 1}};
  for (std::size_t t = 0; t < caps.size(); ++t) {
    std::map<int, BigInt> next;
    const bool last = t + 1 == caps.size();
    for (const auto& [s, count] : ways) {
      for (int part = 1; s + part <= caps[t]; ++part) {
        if (last && s + part != b) continue;
        next[s + part] += count;
      }
    }
    ways = std::move(next);
  }
  return ways.count(b) ? ways[b] : BigInt(0);
}

BigInt d_of_oracle(const Composition& x) {
  BigInt count = 0;
  for (const auto& y : enumerate_compositions(static_cast<int>(x.num_parts()), x.total()))
    if (dominated_by(y, x)) ++count;
  return count;
}

Partition psi(const Composition& x) {
  const int a = static_cast<int>(x.num_parts());
  Partition out;
  for (int i = 1; i <= a - 1; ++i)
    for (int r = 0; r < x.parts()[i - 1] - 1; ++r) out.push_back(a - i);
  return out;
}

BigInt count_subdiagrams(const Partition& lambda) {
  if (lambda.empty()) return 1;
  // ways[v]: sub-diagrams of the rows seen so far whose current row has length v
  std::vector<BigInt> ways(lambda.front() + 1, 0);
  for (int v = 0; v <= lambda.front(); ++v) ways[v] = 1;
  for (std::size_t r = 1; r < lambda.size(); ++r) {
    std::vector<BigInt> next(lambda.front() + 1, 0);
    BigInt running = 0;
    // row r has length v <= lambda[r] and v <= previous row length
    for (int v = lambda.front(); v >= 0; --v) {
      running += ways[v];
      if (v <= lambda[r]) next[v] = running;
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

BigInt catalan_product(const Composition& x) {
  BigInt out = 1;
  for (int p : x.parts()) out *= catalan(p);
  return out;
}

CompositionIdentity composition_identity(int n, int k) {
  if (n < 1 || k < 0) throw std::domain_error("composition_identity: need n >= 1, k >= 0");
  CompositionIdentity out;
  for (const auto& q : enumerate_compositions(k + 1, n - k))
    out.composition_sum += catalan_product(q) * d_of(q);
  out.closed_form = descent_refined_closed_form(n, k);
  const auto table = recurrence_av231_312_321(0, static_cast<std::size_t>(n),
                                              static_cast<std::size_t>(k));
  out.recurrence = *table.at_least_at(0, n, k);
  return out;
}

bool verify_composition_identity(int n, int k) { return composition_identity(n, k).holds(); }

}  // namespace stacksort
