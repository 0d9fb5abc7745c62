#include "stacksort/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacksort {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

TruncSeries TruncSeries::constant(const Rational& c, std::size_t order) {
  TruncSeries s(order);
  s[0] = c;
  return s;
}

TruncSeries TruncSeries::variable(std::size_t order) {
  TruncSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

TruncSeries TruncSeries::polynomial(std::initializer_list<Rational> coeffs, std::size_t order) {
  TruncSeries s(order);
  std::size_t i = 0;
  for (const auto& c : coeffs) {
    if (i > order) break;
    s[i++] = c;
  }
  return s;
}

std::size_t TruncSeries::valuation() const {
  std::size_t i = 0;
  while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
  return i;
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("truncated: order beyond what is known");
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries TruncSeries::shifted_up(std::size_t k) const {
  std::vector<Rational> c(k, Rational(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::shifted_down(std::size_t k) const {
  if (k > order()) throw std::invalid_argument("shifted_down: nothing known after the shift");
  for (std::size_t i = 0; i < k; ++i)
    if (coeffs_[i] != 0) throw std::domain_error("shifted_down: series not divisible by x^k");
  return TruncSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncSeries inverse(const TruncSeries& f) {
  if (f[0] == 0) throw std::domain_error("inverse: constant term is zero");
  const std::size_t order = f.order();
  TruncSeries g(order);
  const Rational inv0 = 1 / f[0];
  g[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (f[i] != 0) acc += f[i] * g[n - i];
    g[n] = -acc * inv0;
  }
  return g;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * inverse(b); }

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= order; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
  if (g[0] != 0) throw std::domain_error("compose: inner series must have zero constant term");
  const std::size_t v = g.valuation();
  std::size_t order = g.order();
  // Terms past f's order start contributing at x^{v (f.order + 1)}.
  if (v <= g.order()) order = std::min(order, v * (f.order() + 1) - 1);
  const std::size_t top = std::min(f.order(), order);
  TruncSeries gt = g.truncated(order);
  TruncSeries out = TruncSeries::constant(f[top], order);
  for (std::size_t i = top; i-- > 0;) {
    out = out * gt;
    out[0] += f[i];
  }
  return out;
}

TruncSeries sqrt(const TruncSeries& f) {
  if (f[0] != 1) throw std::domain_error("sqrt: constant term must be 1");
  const std::size_t order = f.order();
  TruncSeries s(order);
  s[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = f[n];
    for (std::size_t i = 1; i < n; ++i) acc -= s[i] * s[n - i];
    s[n] = acc / 2;
  }
  return s;
}

TruncSeries pow(const TruncSeries& f, std::size_t k) {
  TruncSeries out = TruncSeries::constant(1, f.order());
  for (std::size_t i = 0; i < k; ++i) out = out * f;
  return out;
}

std::string format_series(const TruncSeries& f) {
  std::string out;
  for (std::size_t i = 0; i <= f.order(); ++i)
    out += std::to_string(i) + "\t" + to_string(f[i]) + "\n";
  return out;
}

BivarSeries::BivarSeries(std::size_t x_order, std::size_t second_degree)
    : x_order_(x_order), degree_(second_degree), cells_((x_order + 1) * (second_degree + 1)) {}

BivarSeries BivarSeries::from_x(const TruncSeries& f, std::size_t second_degree) {
  BivarSeries out(f.order(), second_degree);
  for (std::size_t i = 0; i <= f.order(); ++i) out.at(i, 0) = f[i];
  return out;
}

BivarSeries BivarSeries::from_second(const TruncSeries& g, std::size_t x_order,
                                     std::size_t second_degree) {
  if (g.order() < second_degree)
    throw std::invalid_argument("from_second: series not known to the requested degree");
  BivarSeries out(x_order, second_degree);
  for (std::size_t j = 0; j <= second_degree; ++j) out.at(0, j) = g[j];
  return out;
}

BivarSeries BivarSeries::monomial(const Rational& c, std::size_t i, std::size_t j,
                                  std::size_t x_order, std::size_t second_degree) {
  BivarSeries out(x_order, second_degree);
  if (i <= x_order && j <= second_degree) out.at(i, j) = c;
  return out;
}

TruncSeries BivarSeries::at_second_zero() const {
  TruncSeries out(x_order_);
  for (std::size_t i = 0; i <= x_order_; ++i) out[i] = at(i, 0);
  return out;
}

TruncSeries BivarSeries::substitute_second(const TruncSeries& y) const {
  if (y[0] != 0) throw std::domain_error("substitute_second: Y must have zero constant term");
  const std::size_t v = y.valuation();
  std::size_t order = std::min(x_order_, y.order());
  // Missing powers Y^{degree+1} and up start at x^{v (degree + 1)}.
  if (v <= y.order()) order = std::min(order, v * (degree_ + 1) - 1);
  const TruncSeries yt = y.truncated(order);
  TruncSeries out(order);
  TruncSeries ypow = TruncSeries::constant(1, order);
  for (std::size_t j = 0; j <= degree_; ++j) {
    if (ypow.is_zero()) break;
    TruncSeries column(order);
    for (std::size_t i = 0; i <= order; ++i) column[i] = at(i, j);
    out += column * ypow;
    ypow = ypow * yt;
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> BivarSeries::first_nonzero() const {
  for (std::size_t i = 0; i <= x_order_; ++i)
    for (std::size_t j = 0; j <= degree_; ++j)
      if (at(i, j) != 0) return std::make_pair(i, j);
  return std::nullopt;
}

namespace {

void require_same_shape(const BivarSeries& a, const BivarSeries& b) {
  if (a.x_order() != b.x_order() || a.second_degree() != b.second_degree())
    throw std::invalid_argument("bivariate series shapes differ");
}

}  // namespace

BivarSeries& BivarSeries::operator+=(const BivarSeries& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += o.cells_[i];
  return *this;
}

BivarSeries& BivarSeries::operator-=(const BivarSeries& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] -= o.cells_[i];
  return *this;
}

BivarSeries& BivarSeries::operator*=(const Rational& c) {
  for (auto& v : cells_) v *= c;
  return *this;
}

BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
  require_same_shape(a, b);
  const std::size_t X = a.x_order(), M = a.second_degree();
  BivarSeries out(X, M);
  for (std::size_t i1 = 0; i1 <= X; ++i1)
    for (std::size_t j1 = 0; j1 <= M; ++j1) {
      const Rational& u = a.at(i1, j1);
      if (u == 0) continue;
      for (std::size_t i2 = 0; i1 + i2 <= X; ++i2)
        for (std::size_t j2 = 0; j1 + j2 <= M; ++j2) {
          const Rational& w = b.at(i2, j2);
          if (w != 0) out.at(i1 + i2, j1 + j2) += u * w;
        }
    }
  return out;
}

std::string format_series(const BivarSeries& f) {
  std::string out;
  for (std::size_t i = 0; i <= f.x_order(); ++i)
    for (std::size_t j = 0; j <= f.second_degree(); ++j)
      out += std::to_string(i) + "\t" + std::to_string(j) + "\t" + to_string(f.at(i, j)) + "\n";
  return out;
}

TriSeries::TriSeries(std::size_t x_order, std::size_t y_degree, std::size_t z_degree)
    : by_z_(z_degree + 1, BivarSeries(x_order, y_degree)) {}

TriSeries TriSeries::from_xy(const BivarSeries& f, std::size_t z_degree) {
  TriSeries out(f.x_order(), f.second_degree(), z_degree);
  out.by_z_[0] = f;
  return out;
}

TriSeries TriSeries::times_z(std::size_t k) const {
  const auto& proto = by_z_.front();
  TriSeries out(proto.x_order(), proto.second_degree(), z_degree());
  for (std::size_t d = 0; d + k <= z_degree(); ++d) out.by_z_[d + k] = by_z_[d];
  return out;
}

TriSeries TriSeries::at_y_zero() const {
  TriSeries out = *this;
  for (auto& slice : out.by_z_)
    for (std::size_t i = 0; i <= slice.x_order(); ++i)
      for (std::size_t j = 1; j <= slice.second_degree(); ++j) slice.at(i, j) = 0;
  return out;
}

std::optional<TriSeries::Index> TriSeries::first_nonzero() const {
  for (std::size_t k = 0; k < by_z_.size(); ++k)
    if (auto ij = by_z_[k].first_nonzero()) return Index{ij->first, ij->second, k};
  return std::nullopt;
}

TriSeries& TriSeries::operator+=(const TriSeries& o) {
  if (o.by_z_.size() != by_z_.size()) throw std::invalid_argument("z degrees differ");
  for (std::size_t k = 0; k < by_z_.size(); ++k) by_z_[k] += o.by_z_[k];
  return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& o) {
  if (o.by_z_.size() != by_z_.size()) throw std::invalid_argument("z degrees differ");
  for (std::size_t k = 0; k < by_z_.size(); ++k) by_z_[k] -= o.by_z_[k];
  return *this;
}

TriSeries operator*(const TriSeries& a, const TriSeries& b) {
  if (a.by_z_.size() != b.by_z_.size()) throw std::invalid_argument("z degrees differ");
  const auto& proto = a.by_z_.front();
  TriSeries out(proto.x_order(), proto.second_degree(), a.z_degree());
  for (std::size_t k1 = 0; k1 <= a.z_degree(); ++k1) {
    if (a.by_z_[k1].is_zero()) continue;
    for (std::size_t k2 = 0; k1 + k2 <= a.z_degree(); ++k2)
      out.by_z_[k1 + k2] += a.by_z_[k1] * b.by_z_[k2];
  }
  return out;
}

}  // namespace stacksort
