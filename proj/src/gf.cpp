#include "stacksort/gf.hpp"

#include <stdexcept>

#include "stacksort/classes.hpp"

namespace stacksort {

namespace {

TruncSeries x_series(std::size_t order) { return TruncSeries::variable(order); }

TruncSeries one(std::size_t order) { return TruncSeries::constant(1, order); }

// Multiply by x^k and keep the original order.
TruncSeries times_x(const TruncSeries& f, std::size_t k) {
  return f.shifted_up(k).truncated(f.order());
}

std::string describe(const std::optional<std::pair<std::size_t, std::size_t>>& at,
                     const BivarSeries& residual, char second) {
  if (!at) return "";
  return "coefficient of x^" + std::to_string(at->first) + " " + second + "^" +
         std::to_string(at->second) + " is " + to_string(residual.at(at->first, at->second));
}

}  // namespace

TruncSeries catalan_series(std::size_t order) {
  const TruncSeries radicand = TruncSeries::polynomial({1, -4}, order + 1);
  const TruncSeries numerator = one(order + 1) - sqrt(radicand);
  return numerator.shifted_down(1) * Rational(1, 2);
}

TruncSeries catalan_functional_residual(const TruncSeries& c) {
  return times_x(c * c, 1) + one(c.order()) - c;
}

TruncSeries av231_321_preimage_gf(std::size_t order) {
  const TruncSeries c = catalan_series(order);
  const TruncSeries inner = compose(c, times_x(c, 1));  // C(x C(x))
  return inverse(one(order) - times_x(inner, 1));
}

TruncSeries quartic_residual(const TruncSeries& a) {
  const std::size_t N = a.order();
  const TruncSeries a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  return one(N) - 3 * a + TruncSeries::polynomial({3, 2}, N) * a2 +
         TruncSeries::polynomial({-1, -4, 2}, N) * a3 +
         TruncSeries::polynomial({0, 2, -2, 1}, N) * a4;
}

BivarSeries catalan_divided_difference(std::size_t x_order, std::size_t y_degree) {
  BivarSeries d(x_order, y_degree);
  for (std::size_t i = 0; i <= x_order; ++i)
    for (std::size_t j = 0; j <= y_degree; ++j)
      d.at(i, j) = Rational(catalan(static_cast<int>(i + j + 1)));
  return d;
}

TruncSeries kernel_root_av231_321(std::size_t order) {
  if (order < 1) throw std::invalid_argument("kernel_root_av231_321: order must be >= 1");
  const BivarSeries d = catalan_divided_difference(order, order);
  const TruncSeries x = x_series(order);
  auto sweep = [&](const TruncSeries& y) {
    return x + times_x(y * d.substitute_second(y), 2);
  };
  TruncSeries y = x;
  for (std::size_t i = 0; i < order; ++i) y = sweep(y);
  if (!(sweep(y) == y))
    throw std::logic_error("kernel_root_av231_321: fixed point did not settle");
  return y;
}

TruncSeries kernel_residual_av231_321(const TruncSeries& y) {
  const std::size_t N = y.order();
  const BivarSeries d = catalan_divided_difference(N, N);
  return times_x(y * d.substitute_second(y), 2) - y + x_series(N);
}

TruncSeries boolean_catalan_gf(std::size_t order) {
  const TruncSeries radicand = TruncSeries::polynomial({1, -4, -4}, order + 1);
  const TruncSeries numerator = TruncSeries::polynomial({1, -2}, order + 1) - sqrt(radicand);
  return numerator.shifted_down(1) * Rational(1, 4);
}

TruncSeries kernel_root_av132_231(std::size_t order) {
  const TruncSeries root = sqrt(TruncSeries::polynomial({1, -4, -4}, order));
  const TruncSeries numerator = TruncSeries::polynomial({0, 3, 2}, order) - times_x(root, 1);
  const TruncSeries denominator = TruncSeries::polynomial({2, 4, 2}, order);
  return numerator / denominator;
}

TruncSeries kernel_residual_av132_231(const TruncSeries& y) {
  const std::size_t N = y.order();
  const TruncSeries cy = compose(catalan_series(N), y);
  return times_x(y * (cy - one(N)), 1) - y + x_series(N);
}

TruncSeries av132_231_from_kernel(const TruncSeries& y) {
  const std::size_t N = y.order();
  const TruncSeries cy = compose(catalan_series(N), y);
  const TruncSeries ycy = y * cy;
  return ycy.shifted_down(1) - (ycy * (cy - one(N))).truncated(N - 1);
}

BivarSeries descent_refined_gf(std::size_t x_order, std::size_t z_degree) {
  if (x_order < 1) throw std::invalid_argument("descent_refined_gf: x order must be >= 1");
  BivarSeries j(x_order, z_degree);
  j.at(1, 0) = 1;
  for (std::size_t k = 0; k <= z_degree; ++k)
    for (std::size_t n = 2 * k + 1; n + 1 <= x_order; ++n)
      j.at(n + 1, k) = Rational(descent_refined_closed_form(static_cast<long>(n),
                                                            static_cast<long>(k)));
  return j;
}

BivarSeries descent_refined_fixed_point_residual(const BivarSeries& j) {
  const std::size_t X = j.x_order(), Z = j.second_degree();
  const BivarSeries x = BivarSeries::monomial(1, 1, 0, X, Z);
  const BivarSeries z = BivarSeries::monomial(1, 0, 1, X, Z);
  const BivarSeries unit = BivarSeries::monomial(1, 0, 0, X, Z);
  const BivarSeries j2 = j * j;
  return (j - x) * (unit - z * j2) - j2;
}

BivarSeries tail_series_from_brute(const RefinedCountTable& table, std::size_t x_order,
                                   std::size_t y_degree) {
  BivarSeries out(x_order, y_degree);
  for (std::size_t n = 0; n <= x_order; ++n)
    for (std::size_t l = 0; l <= y_degree; ++l) {
      auto v = table.at_least_at(static_cast<int>(l), static_cast<int>(n));
      if (!v) throw std::invalid_argument("tail_series_from_brute: table too small");
      out.at(n, l) = Rational(*v);
    }
  return out;
}

std::vector<EquationCheck> verify_bivariate_functional_eqs(std::size_t x_order,
                                                           std::size_t y_degree,
                                                           std::size_t tri_order,
                                                           std::size_t cap) {
  const std::size_t X = x_order, M = y_degree;
  const std::string trunc = "(x^" + std::to_string(X) + ", y^" + std::to_string(M) + ")";
  const BivarSeries x = BivarSeries::monomial(1, 1, 0, X, M);
  const BivarSeries y = BivarSeries::monomial(1, 0, 1, X, M);
  const BivarSeries unit = BivarSeries::monomial(1, 0, 0, X, M);
  const BivarSeries cy = BivarSeries::from_second(catalan_series(M), X, M);
  std::vector<EquationCheck> out;

  {
    const auto table = refined_counts_brute(Flavor::kAv231_321, X + M, cap);
    const BivarSeries i = tail_series_from_brute(table, X, M);
    const BivarSeries i0 = BivarSeries::from_x(i.at_second_zero(), M);
    const BivarSeries d = catalan_divided_difference(X, M);
    const BivarSeries residual =
        (i - i0) * (x * x * y * d - y + x) - y * (i0 - cy);
    const auto bad = residual.first_nonzero();
    out.push_back({"kernel equation for s^-1(Av(231,321))", trunc, !bad,
                   describe(bad, residual, 'y')});
  }
  {
    const auto table = refined_counts_brute(Flavor::kAv132_231, X + M, cap);
    const BivarSeries i = tail_series_from_brute(table, X, M);
    const BivarSeries i0 = BivarSeries::from_x(i.at_second_zero(), M);
    const BivarSeries lhs = i * (x * y * (cy - unit) - y + x);
    const BivarSeries rhs = x * i0 - y * cy + x * y * cy * (cy - unit);
    const BivarSeries residual = lhs - rhs;
    const auto bad = residual.first_nonzero();
    out.push_back({"kernel equation for s^-1(Av(132,231))", trunc, !bad,
                   describe(bad, residual, 'y')});
  }
  {
    const std::size_t T = tri_order;
    const auto table = refined_counts_brute(Flavor::kAv231_312_321, 2 * T, cap);
    TriSeries j(T, T, T);
    for (std::size_t n = 0; n <= T; ++n)
      for (std::size_t l = 0; l <= T; ++l)
        for (std::size_t k = 0; k <= T; ++k) {
          auto v = table.at_least_at(static_cast<int>(l), static_cast<int>(n), static_cast<int>(k));
          j.at(n, l, k) = v ? Rational(*v) : Rational(0);
        }
    const TriSeries j0 = j.at_y_zero();
    const BivarSeries tx = BivarSeries::monomial(1, 1, 0, T, T);
    const BivarSeries ty = BivarSeries::monomial(1, 0, 1, T, T);
    const BivarSeries tunit = BivarSeries::monomial(1, 0, 0, T, T);
    const BivarSeries tcy = BivarSeries::from_second(catalan_series(T), T, T);
    const TriSeries kernel = TriSeries::from_xy(tx * tx * (tcy - tunit), T).times_z(1) +
                             TriSeries::from_xy(tx - ty, T);
    const TriSeries residual =
        (j - j0) * kernel - TriSeries::from_xy(ty, T) * (j0 - TriSeries::from_xy(tcy, T));
    const auto bad = residual.first_nonzero();
    std::string failure;
    if (bad)
      failure = "coefficient of x^" + std::to_string(bad->i) + " y^" + std::to_string(bad->j) +
                " z^" + std::to_string(bad->k) + " is " +
                to_string(residual.z_coeff(bad->k).at(bad->i, bad->j));
    const std::string t = std::to_string(T);
    out.push_back({"kernel equation for s^-1(Av(231,312,321)) by descents",
                   "(x^" + t + ", y^" + t + ", z^" + t + ")", !bad, failure});
  }
  return out;
}

}  // namespace stacksort
