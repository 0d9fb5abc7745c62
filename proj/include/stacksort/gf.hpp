#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stacksort/classes.hpp"
#include "stacksort/series.hpp"
#include "stacksort/stack_sort.hpp"

namespace stacksort {

/// C(x) = (1 - sqrt(1 - 4x)) / (2x), through x^order.
TruncSeries catalan_series(std::size_t order);

/// x C(x)^2 + 1 - C(x); vanishes identically for the Catalan series.
TruncSeries catalan_functional_residual(const TruncSeries& c);

/// 1 / (1 - x C(x C(x))): counts s^{-1}(Av_n(231,321)).
TruncSeries av231_321_preimage_gf(std::size_t order);

/// Q(a, x) = 1 - 3a + (3+2x)a^2 + (-1-4x+2x^2)a^3 + (2x-2x^2+x^3)a^4 evaluated
/// at the series a.
TruncSeries quartic_residual(const TruncSeries& a);

/// The divided difference (C(x) - C(y)) / (x - y) = sum_{i,j} C_{i+j+1} x^i y^j,
/// built as a double sum rather than by dividing.
BivarSeries catalan_divided_difference(std::size_t x_order, std::size_t y_degree);

/// Y = x + O(x^2) with x (C(x)-C(Y))/(x-Y) - 1/x + 1/Y = 0. Solved as the
/// fixed point Y = x + x^2 Y D(x, Y), one new coefficient per sweep.
TruncSeries kernel_root_av231_321(std::size_t order);

/// x^2 Y D(x, Y) - Y + x: the kernel above multiplied through by xY.
TruncSeries kernel_residual_av231_321(const TruncSeries& y);

/// (1 - 2x - sqrt(1 - 4x - 4x^2)) / (4x), the Boolean-Catalan numbers; the
/// constant term is 0.
TruncSeries boolean_catalan_gf(std::size_t order);

/// Y = (3x + 2x^2 - x sqrt(1 - 4x - 4x^2)) / (2 (1+x)^2).
TruncSeries kernel_root_av132_231(std::size_t order);

/// x Y (C(Y) - 1) - Y + x.
TruncSeries kernel_residual_av132_231(const TruncSeries& y);

/// I(x, 0) recovered from the kernel root of the (132,231) equation:
/// Y C(Y) / x - Y C(Y) (C(Y) - 1). Known through order - 1.
TruncSeries av132_231_from_kernel(const TruncSeries& y);

/// x J(x, 0, z) from the Lagrange-inversion closed form:
/// x + x sum_{k>=0} sum_{n>=2k+1} binom(n-k-1,k) binom(2n-2k,n)/(n+1) x^n z^k.
BivarSeries descent_refined_gf(std::size_t x_order, std::size_t z_degree);

/// (J - x)(1 - z J^2) - J^2: the fixed-point equation J = x + J^2/(1 - z J^2)
/// with the invertible denominator cleared.
BivarSeries descent_refined_fixed_point_residual(const BivarSeries& j);

/// Result of checking one functional equation coefficient by coefficient.
struct EquationCheck {
  std::string name;
  std::string truncation;  // e.g. "(x^6, y^6)"
  bool holds = false;
  std::string first_failure;  // "" when it holds
};

/// Bivariate series sum_{n, l} B_{>=l}(n) x^n y^l from a brute-force table.
BivarSeries tail_series_from_brute(const RefinedCountTable& table, std::size_t x_order,
                                   std::size_t y_degree);

/// Builds I(x, y) for Av(231,321) and Av(132,231) and J(x, y, z) for
/// Av(231,312,321) from brute-force tables, then checks the three kernel
/// equations with every 1/y cleared:
///   (I - I0)(x^2 y D(x,y) - y + x) = y (I0 - C(y))                   [231,321]
///   I (x y (C(y)-1) - y + x) = -y C(y) + x I0 + x y C(y)(C(y)-1)     [132,231]
///   (J - J0)(x^2 z (C(y)-1) + x - y) = y (J0 - C(y))                 [231,312,321]
std::vector<EquationCheck> verify_bivariate_functional_eqs(std::size_t x_order,
                                                           std::size_t y_degree,
                                                           std::size_t tri_order,
                                                           std::size_t cap);

}  // namespace stacksort
