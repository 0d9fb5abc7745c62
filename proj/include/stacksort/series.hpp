#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stacksort/numbers.hpp"

namespace stacksort {

/// A power series in x known exactly through x^order. Coefficients beyond the
/// order are unknown, not zero; results carry the order they are valid to.
class TruncSeries {
 public:
  TruncSeries() : coeffs_(1) {}
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TruncSeries(std::vector<Rational> coeffs);

  static TruncSeries constant(const Rational& c, std::size_t order);
  static TruncSeries variable(std::size_t order);  // the series x
  /// Polynomial given by its coefficients, zero-padded to `order`.
  static TruncSeries polynomial(std::initializer_list<Rational> coeffs, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient; order() + 1 when all are zero.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  TruncSeries truncated(std::size_t order) const;
  /// Multiply by x^k; the result is known through order() + k.
  TruncSeries shifted_up(std::size_t k) const;
  /// Divide by x^k; requires the first k coefficients to vanish.
  TruncSeries shifted_down(std::size_t k) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);

  /// Agreement through the smaller of the two orders.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

/// 1/f; requires f[0] != 0.
TruncSeries inverse(const TruncSeries& f);
/// f(g); requires g[0] == 0.
TruncSeries compose(const TruncSeries& f, const TruncSeries& g);
/// The square root with constant term 1; requires f[0] == 1.
TruncSeries sqrt(const TruncSeries& f);
TruncSeries pow(const TruncSeries& f, std::size_t k);

/// One coefficient per line, "n<TAB>value".
std::string format_series(const TruncSeries& f);

/// A series in x and a second variable (y or z): exact through x^x_order and
/// of degree at most second_degree in the second variable.
class BivarSeries {
 public:
  BivarSeries(std::size_t x_order, std::size_t second_degree);

  /// f(x) with no dependence on the second variable.
  static BivarSeries from_x(const TruncSeries& f, std::size_t second_degree);
  /// g(y) with no dependence on x, truncated to the given degree.
  static BivarSeries from_second(const TruncSeries& g, std::size_t x_order,
                                 std::size_t second_degree);
  static BivarSeries monomial(const Rational& c, std::size_t i, std::size_t j,
                              std::size_t x_order, std::size_t second_degree);

  std::size_t x_order() const { return x_order_; }
  std::size_t second_degree() const { return degree_; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells_[idx(i, j)]; }
  Rational& at(std::size_t i, std::size_t j) { return cells_[idx(i, j)]; }

  /// The coefficient of (second variable)^0, as a series in x.
  TruncSeries at_second_zero() const;
  /// Substitute a series Y with Y[0] = 0 for the second variable.
  TruncSeries substitute_second(const TruncSeries& y) const;

  /// First nonzero coefficient in (i, j) lexicographic order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;
  bool is_zero() const { return !first_nonzero(); }

  BivarSeries& operator+=(const BivarSeries& o);
  BivarSeries& operator-=(const BivarSeries& o);
  BivarSeries& operator*=(const Rational& c);
  friend BivarSeries operator+(BivarSeries a, const BivarSeries& b) { return a += b; }
  friend BivarSeries operator-(BivarSeries a, const BivarSeries& b) { return a -= b; }
  friend BivarSeries operator*(BivarSeries a, const Rational& c) { return a *= c; }
  friend BivarSeries operator*(const BivarSeries& a, const BivarSeries& b);

 private:
  std::size_t idx(std::size_t i, std::size_t j) const { return i * (degree_ + 1) + j; }

  std::size_t x_order_;
  std::size_t degree_;
  std::vector<Rational> cells_;
};

/// "i<TAB>j<TAB>value", one nonzero or zero coefficient per line, row-major.
std::string format_series(const BivarSeries& f);

/// A polynomial in z whose coefficients are BivarSeries in (x, y).
class TriSeries {
 public:
  TriSeries(std::size_t x_order, std::size_t y_degree, std::size_t z_degree);
  static TriSeries from_xy(const BivarSeries& f, std::size_t z_degree);

  std::size_t z_degree() const { return by_z_.size() - 1; }
  const BivarSeries& z_coeff(std::size_t k) const { return by_z_[k]; }
  BivarSeries& z_coeff(std::size_t k) { return by_z_[k]; }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return by_z_[k].at(i, j); }

  /// Multiply by z^k, dropping terms above the z degree.
  TriSeries times_z(std::size_t k) const;
  /// Coefficient of y^0 in every z slice.
  TriSeries at_y_zero() const;

  struct Index {
    std::size_t i, j, k;
  };
  std::optional<Index> first_nonzero() const;

  TriSeries& operator+=(const TriSeries& o);
  TriSeries& operator-=(const TriSeries& o);
  friend TriSeries operator+(TriSeries a, const TriSeries& b) { return a += b; }
  friend TriSeries operator-(TriSeries a, const TriSeries& b) { return a -= b; }
  friend TriSeries operator*(const TriSeries& a, const TriSeries& b);

 private:
  std::vector<BivarSeries> by_z_;
};

}  // namespace stacksort
