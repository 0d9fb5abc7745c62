#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "stacksort/classes.hpp"
#include "stacksort/compositions.hpp"

using namespace stacksort;

namespace {

// Partitions fitting inside lambda, counted by recursion on rows.
BigInt subdiagrams_oracle(const Partition& lambda) {
  std::function<BigInt(std::size_t, int)> rec = [&](std::size_t row, int cap) -> BigInt {
    if (row == lambda.size()) return 1;
    BigInt total = 0;
    for (int len = 0; len <= std::min(cap, lambda[row]); ++len) total += rec(row + 1, len);
    return total;
  };
  return rec(0, lambda.empty() ? 0 : lambda[0]);
}

bool prefix_le(const std::vector<int>& y, const std::vector<int>& x) {
  int sy = 0, sx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sy += y[i];
    sx += x[i];
    if (sy > sx) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("composition basics") {
  CHECK_THROWS_AS(Composition({}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
  const Composition c({2, 1, 3});
  CHECK(c.total() == 6);
  CHECK(c.prefix_sums() == std::vector<int>{2, 3, 6});
  CHECK(to_string(c) == "2,1,3");
  CHECK(to_string(Partition{3, 1}) == "(3,1)");
}

TEST_CASE("enumeration") {
  CHECK(enumerate_compositions(2, 3) == std::vector<Composition>{Composition({1, 2}), Composition({2, 1})});
  CHECK(enumerate_compositions(1, 5) == std::vector<Composition>{Composition({5})});
  CHECK(enumerate_compositions(3, 5).size() == 6);
  CHECK(enumerate_compositions(4, 3).empty());
  for (int a = 1; a <= 6; ++a)
    for (int b = a; b <= 9; ++b) {
      const auto all = enumerate_compositions(a, b);
      CHECK(BigInt(all.size()) == binomial(b - 1, a - 1));
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("dominance order") {
  const Composition x12({1, 2}), x21({2, 1});
  CHECK(dominated_by(x12, x21));
  CHECK_FALSE(dominated_by(x21, x12));
  CHECK(dominated_by(x21, x21));
  CHECK_THROWS_AS(dominated_by(x12, Composition({3})), std::invalid_argument);
  CHECK_THROWS_AS(dominated_by(x12, Composition({1, 1})), std::invalid_argument);

  for (int a = 1; a <= 5; ++a)
    for (int b = a; a + b <= 10; ++b) {
      const auto all = enumerate_compositions(a, b);
      for (const auto& p : all) {
        CHECK(dominated_by(p, p));
        for (const auto& q : all) {
          REQUIRE(dominated_by(p, q) == prefix_le(p.parts(), q.parts()));
          if (dominated_by(p, q) && dominated_by(q, p)) CHECK(p == q);
          if (!dominated_by(p, q)) continue;
          for (const auto& r : all)
            if (dominated_by(q, r)) CHECK(dominated_by(p, r));
        }
      }
    }
}

TEST_CASE("order ideal sizes") {
  CHECK(d_of(Composition({2, 1})) == 2);
  CHECK(d_of(Composition({1, 1, 1, 1})) == 1);
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 9; ++b) {
      std::vector<int> top(a, 1);
      top[0] = b - a + 1;
      CHECK(d_of(Composition(top)) == binomial(b - 1, a - 1));
    }
  for (int a = 1; a <= 7; ++a)
    for (int b = a; a + b <= 14; ++b)
      for (const auto& x : enumerate_compositions(a, b)) {
        BigInt below = 0;
        for (const auto& y : enumerate_compositions(a, b))
          if (prefix_le(y.parts(), x.parts())) ++below;
        REQUIRE(d_of(x) == below);
        REQUIRE(d_of_oracle(x) == below);
      }
}

TEST_CASE("partitions from compositions") {
  CHECK(count_subdiagrams({}) == 1);
  CHECK(count_subdiagrams({1}) == 2);
  CHECK(count_subdiagrams({1, 1}) == 3);
  CHECK(count_subdiagrams({2, 1}) == 5);
  CHECK(psi(Composition({2, 1})) == Partition{1});
  CHECK(psi(Composition({3})) == Partition{});
  for (int a = 1; a <= 6; ++a)
    for (int b = a; a + b <= 12; ++b)
      for (const auto& x : enumerate_compositions(a, b)) {
        const Partition lambda = psi(x);
        CHECK(std::is_sorted(lambda.rbegin(), lambda.rend()));
        CHECK(count_subdiagrams(lambda) == subdiagrams_oracle(lambda));
        CHECK(count_subdiagrams(lambda) == d_of_oracle(x));
      }

  // x_i parts of size a - i, read literally, overcounts already at (2,1)
  Partition literal;
  const Composition x({2, 1});
  for (int i = 1; i <= 2; ++i)
    for (int r = 0; r < x.parts()[i - 1]; ++r)
      if (2 - i > 0) literal.push_back(2 - i);
  CHECK(literal == Partition{1, 1});
  CHECK(subdiagrams_oracle(literal) == 3);
  CHECK(d_of_oracle(x) == 2);
}

TEST_CASE("Catalan products") {
  CHECK(catalan_product(Composition({1, 1})) == 1);
  CHECK(catalan_product(Composition({2, 3})) == 10);
  for (int b = 1; b <= 12; ++b) CHECK(catalan_product(Composition({b})) == oracle::catalan(b));
}

TEST_CASE("composition identity") {
  const CompositionIdentity small = composition_identity(3, 1);
  CHECK(small.composition_sum == 1);
  CHECK(small.holds());
  for (int n = 1; n <= 14; ++n) {
    CHECK(composition_identity(n, 0).composition_sum == oracle::catalan(n));
    for (int k = 0; k <= n; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(verify_composition_identity(n, k));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += composition_identity(n, k).composition_sum;
    CHECK(sum == class_fertility(n, ClassSpec::classical({{2, 3, 1}, {3, 1, 2}, {3, 2, 1}})));
  }
}
