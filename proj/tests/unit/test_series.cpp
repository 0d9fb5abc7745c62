#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stacksort/series.hpp"

using namespace stacksort;

namespace {

TruncSeries random_series(std::mt19937& rng, std::size_t order, bool unit_constant) {
  TruncSeries f(order);
  for (std::size_t i = 0; i <= order; ++i)
    f[i] = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4));
  if (unit_constant) f[0] = 1;
  return f;
}

}  // namespace

TEST_CASE("construction and access") {
  const TruncSeries p = TruncSeries::polynomial({1, 2, 3}, 5);
  CHECK(p.order() == 5);
  CHECK(p[2] == 3);
  CHECK(p[4] == 0);
  CHECK(p.valuation() == 0);
  CHECK(TruncSeries::variable(3).valuation() == 1);
  CHECK(TruncSeries(4).is_zero());
  CHECK(p.shifted_up(2)[4] == 3);
  CHECK(TruncSeries::polynomial({0, 2, 3}, 5).shifted_down(1)[0] == 2);
  CHECK_THROWS_AS(p.shifted_down(1), std::domain_error);
  CHECK(p.truncated(1).order() == 1);
}

TEST_CASE("order of results is the smaller operand order") {
  const TruncSeries a = TruncSeries::polynomial({1, 1}, 7);
  const TruncSeries b = TruncSeries::polynomial({1, 1}, 4);
  CHECK((a + b).order() == 4);
  CHECK((a * b).order() == 4);
  CHECK(a == b);  // equal through the common order
  CHECK_FALSE(a == TruncSeries::polynomial({1, 2}, 3));
}

TEST_CASE("square root of 1 - 4x") {
  const int order = 30;
  const TruncSeries f = sqrt(TruncSeries::polynomial({1, -4}, order));
  const auto expected = oracle::sqrt_one_plus(Rational(-4), order);
  for (int n = 0; n <= order; ++n) CHECK(f[n] == expected[n]);
  CHECK(f[1] == -2);
  CHECK(f[2] == -2);
  CHECK(f[3] == -4);
  CHECK_THROWS_AS(sqrt(TruncSeries::polynomial({4, 1}, 3)), std::domain_error);
}

TEST_CASE("division and inverse") {
  const TruncSeries geometric = inverse(TruncSeries::polynomial({1, -1}, 10));
  for (int n = 0; n <= 10; ++n) CHECK(geometric[n] == 1);
  CHECK_THROWS_AS(inverse(TruncSeries::variable(4)), std::domain_error);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const TruncSeries f = random_series(rng, 8, false);
    TruncSeries g = random_series(rng, 8, false);
    g[0] = Rational(1 + static_cast<int>(rng() % 3), 2);
    CHECK((f / g) * g == f);
  }
}

TEST_CASE("composition") {
  const TruncSeries f = TruncSeries::polynomial({7, 1, 1, 1}, 6);
  CHECK(compose(f, TruncSeries(6)) == TruncSeries::constant(7, 6));
  CHECK_THROWS_AS(compose(f, TruncSeries::polynomial({1, 1}, 6)), std::domain_error);
  // 1/(1-x) at x^2
  const TruncSeries g = compose(inverse(TruncSeries::polynomial({1, -1}, 12)),
                                TruncSeries::polynomial({0, 0, 1}, 12));
  for (int n = 0; n <= 12; ++n) CHECK(g[n] == (n % 2 == 0 ? 1 : 0));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncSeries a = random_series(rng, 7, false);
    TruncSeries b = random_series(rng, 7, false);
    TruncSeries c = random_series(rng, 7, false);
    b[0] = 0;
    c[0] = 0;
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("square roots square back") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const TruncSeries f = random_series(rng, 9, true);
    const TruncSeries r = sqrt(f);
    CHECK(r * r == f);
    CHECK(r[0] == 1);
  }
}

TEST_CASE("powers") {
  const TruncSeries p = pow(TruncSeries::polynomial({1, 1}, 6), 4);
  for (int n = 0; n <= 6; ++n) CHECK(p[n] == Rational(binomial(4, n)));
  CHECK(pow(TruncSeries::polynomial({3, 1}, 6), 0) == TruncSeries::constant(1, 6));
}

TEST_CASE("printing") {
  CHECK(format_series(TruncSeries::polynomial({1, Rational(-1, 2)}, 2)) == "0\t1\n1\t-1/2\n2\t0\n");
  BivarSeries b(1, 1);
  b.at(1, 0) = 3;
  CHECK(format_series(b) == "0\t0\t0\n0\t1\t0\n1\t0\t3\n1\t1\t0\n");
}

TEST_CASE("bivariate arithmetic") {
  const BivarSeries x = BivarSeries::monomial(1, 1, 0, 5, 4);
  const BivarSeries y = BivarSeries::monomial(1, 0, 1, 5, 4);
  const BivarSeries s = x + y;
  const BivarSeries sq = s * s * s;
  for (std::size_t i = 0; i <= 3; ++i) CHECK(sq.at(i, 3 - i) == Rational(binomial(3, static_cast<long>(i))));
  CHECK(sq.at(1, 1) == 0);
  CHECK((sq - sq).is_zero());
  CHECK(sq.first_nonzero() == std::make_pair(std::size_t{0}, std::size_t{3}));
  CHECK(sq.at_second_zero()[3] == 1);

  const TruncSeries t = TruncSeries::polynomial({0, 1}, 5);
  const TruncSeries substituted = sq.substitute_second(t);  // (x + x)^3
  CHECK(substituted[3] == 8);
  CHECK(substituted[2] == 0);

  const BivarSeries from = BivarSeries::from_second(TruncSeries::polynomial({1, 2}, 4), 5, 4);
  CHECK(from.at(0, 1) == 2);
  CHECK(BivarSeries::from_x(t, 4).at(1, 0) == 1);
}

TEST_CASE("trivariate arithmetic") {
  BivarSeries xy = BivarSeries::monomial(1, 1, 1, 4, 4);
  const TriSeries t = TriSeries::from_xy(xy, 3);
  const TriSeries tz = t.times_z(2);
  CHECK(tz.z_coeff(2).at(1, 1) == 1);
  CHECK(tz.z_coeff(0).is_zero());
  const TriSeries prod = tz * tz;
  CHECK(prod.z_coeff(3).is_zero());  // z^4 is past the truncation
  CHECK(!(t * t).z_coeff(0).is_zero());
  CHECK(t.at_y_zero().z_coeff(0).is_zero());
  REQUIRE(tz.first_nonzero().has_value());
  CHECK(tz.first_nonzero()->k == 2);
}
