#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/stack_sort.hpp"

using namespace stacksort;

TEST_CASE("construction rejects repeated and non-positive entries") {
  CHECK_THROWS_AS(Permutation({1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(Permutation({4, 2, 6}).size() == 3);
  CHECK(Permutation::identity(4) == Permutation{1, 2, 3, 4});
}

TEST_CASE("normalize") {
  CHECK(normalize(Permutation{4, 2, 6}) == Permutation{2, 1, 3});
  CHECK(normalize(Permutation{1, 2, 3}) == Permutation{1, 2, 3});
  CHECK(normalize(Permutation{3, 1, 5, 8}) == Permutation{2, 1, 3, 4});
  CHECK(normalize(Permutation{}).empty());

  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> pool(30);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(1 + rng() % 9);
    const Permutation p(pool);
    const Permutation q = normalize(p);
    CHECK(q.vec() == oracle::normalize(pool));
    CHECK(q.is_normalized());
    CHECK(normalize(q) == q);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) CHECK((p[i] < p[j]) == (q[i] < q[j]));
  }
}

TEST_CASE("descents and peaks") {
  CHECK(descents(Permutation{3, 1, 5, 4, 2, 6, 7, 8}) == std::vector<std::size_t>{1, 3, 4});
  CHECK(des(Permutation::identity(6)) == 0);
  CHECK(des(Permutation{}) == 0);
  CHECK(peaks(Permutation{1, 4, 2, 5, 3}) == 2);
  CHECK(peaks(Permutation{3, 2, 1}) == 0);
}

TEST_CASE("tail length") {
  CHECK(tail_length(Permutation{3, 1, 5, 4, 2, 6, 7, 8}) == 3);
  CHECK(tail_length(Permutation{1, 2, 3, 4}) == 4);
  CHECK(tail_length(Permutation{2, 1, 3, 4}) == 2);
  CHECK(tail_length(Permutation{2, 1}) == 0);
  CHECK(tail_length(Permutation{}) == 0);
  CHECK_THROWS_AS(tail_length(Permutation{2, 5}), std::invalid_argument);

  for (int n = 1; n <= 6; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation p(v);
      CHECK((tail_length(p) == p.size()) == p.is_increasing());
    }
}

TEST_CASE("rmax and zeil") {
  CHECK(zeil(Permutation{3, 2, 1}) == 3);
  CHECK(zeil(Permutation{1, 2, 3}) == 1);
  CHECK(zeil(Permutation{1, 4, 2, 5, 3}) == 1);
  CHECK(rmax(Permutation{1, 4, 2, 5, 3}) == 2);
  CHECK(rmax(Permutation{3, 2, 1}) == 3);
  CHECK_THROWS(zeil(Permutation{2, 3}));
  CHECK_THROWS(zeil(Permutation{}));

  for (int n = 1; n <= 7; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation p(v);
      const std::size_t z = zeil(p);
      REQUIRE(z == static_cast<std::size_t>(oracle::zeil(v)));
      CHECK(z == std::min(rmax(p), tail_length(sort_once(p))));
    }
}

TEST_CASE("text form") {
  CHECK(to_string(Permutation{3, 1, 2}) == "3 1 2");
  CHECK(to_string(Permutation{}) == "");
}
