#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stacksort/hooks.hpp"
#include "stacksort/stack_sort.hpp"

using namespace stacksort;

TEST_CASE("one pass") {
  CHECK(sort_once(Permutation{1, 4, 2, 5, 3}) == Permutation{1, 2, 4, 3, 5});
  CHECK(sort_once(Permutation{}).empty());
  CHECK(sort_once(Permutation{3, 2, 1}) == Permutation{1, 2, 3});
  CHECK(sort_once(Permutation{2, 3, 1}) == Permutation{2, 1, 3});
  CHECK(sort_once(Permutation{40, 10, 30}) == Permutation{10, 30, 40});
}

TEST_CASE("recursive map matches a literal stack") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation out = sort_once(Permutation(v));
      REQUIRE(out.vec() == oracle::stack_sort(v));
      if (n > 0) CHECK(out[out.size() - 1] == n);
    }
}

TEST_CASE("iterates") {
  CHECK(sort_iterate(Permutation{1, 2, 3}, 0) == Permutation{1, 2, 3});
  CHECK(sort_iterate(Permutation{3, 2, 1}, 2) == Permutation{1, 2, 3});
  CHECK(is_t_stack_sortable(Permutation::identity(5), 0));
  CHECK_FALSE(is_t_stack_sortable(Permutation{2, 3, 1}, 1));
  CHECK(is_t_stack_sortable(Permutation{2, 3, 1}, 2));
  for (int n = 1; n <= 7; ++n)
    for (const auto& v : oracle::all_perms(n))
      CHECK(sort_iterate(Permutation(v), n - 1).is_increasing());
}

TEST_CASE("preimages") {
  CHECK(preimages(Permutation{1, 2, 3}) ==
        std::vector<Permutation>{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {3, 1, 2}, {3, 2, 1}});
  CHECK(preimages(Permutation{1, 3, 2}).empty());
  CHECK(preimages(Permutation{2, 1, 3}) == std::vector<Permutation>{{2, 3, 1}});
  CHECK(preimages(Permutation{}) == std::vector<Permutation>{Permutation{}});
  for (int n = 0; n <= 6; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      std::vector<std::vector<int>> got;
      for (const auto& q : preimages(Permutation(v))) got.push_back(q.vec());
      REQUIRE(got == oracle::preimages_by_forward_map(v));
    }
}

TEST_CASE("fertility") {
  for (int l = 0; l <= 9; ++l) CHECK(fertility(Permutation::identity(l)) == oracle::catalan(l));
  CHECK(fertility(Permutation{1, 3, 2}) == 0);
  CHECK(fertility(Permutation{2, 1, 3}) == 1);

  for (int n = 0; n <= 7; ++n) {
    BigInt total = 0;
    for (const auto& v : oracle::all_perms(n)) total += fertility(Permutation(v));
    CHECK(total == oracle::factorial(n));
  }

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> pool(40);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(1 + rng() % 7);
    std::sort(pool.begin(), pool.end() - 1);  // more targets with nonzero fertility
    const Permutation p(pool);
    CHECK(fertility(p) == fertility(normalize(p)));
    CHECK(fertility(p) == preimages(p).size());
  }
}

TEST_CASE("fertility by decomposition") {
  const Permutation example{3, 1, 5, 4, 2, 6, 7, 8};
  const BigInt direct = oracle::preimages_by_forward_map(example.vec()).size();
  CHECK(fertility(example) == direct);
  CHECK(fertility_by_decomposition(example, 3) == direct);
  CHECK(fertility_by_decomposition(example, 4) == direct);
  CHECK(fertility_by_decomposition(Permutation{2, 1, 3}, 1) == 1);
  CHECK_THROWS_AS(fertility_by_decomposition(example, 1), std::invalid_argument);
  CHECK_THROWS_AS(fertility_by_decomposition(example, 5), std::invalid_argument);
  CHECK_THROWS_AS(fertility_by_decomposition(Permutation{1, 3}, 1), std::invalid_argument);

  for (int n = 2; n <= 6; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation p(v);
      for (std::size_t d : tail_bound_descents(p))
        REQUIRE(fertility_by_decomposition(p, d) == fertility(p));
    }
}

TEST_CASE("t-sortable counts") {
  CHECK(count_t_sortable(0, 3) == 1);
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_t_sortable(n, 1) == oracle::catalan(n));
    const BigInt w2 = 2 * stacksort::binomial(3 * n, n) / ((n + 1) * (2 * n + 1));
    CHECK(count_t_sortable(n, 2) == w2);
    CHECK(count_t_sortable(n, n - 1) == oracle::factorial(n));
  }
  CHECK_THROWS_AS(count_t_sortable(9, 1), CapExceeded);
  CHECK(count_t_sortable(9, 1, 9) == 4862);
  try {
    count_t_sortable(12, 1, 10);
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("cap 10") != std::string::npos);
  }
}
