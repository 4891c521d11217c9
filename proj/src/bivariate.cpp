#include "jetworks/bivariate.hpp"

#include <algorithm>

#include "jetworks/error.hpp"

namespace jetworks {

BiPoly::BiPoly(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void BiPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly BiPoly::divided_difference(const Polynomial& x) {
  const int d = x.degree();
  if (d <= 0) return {};
  std::vector<Polynomial> c(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> tc(static_cast<std::size_t>(d - i));
    for (int k = i + 1; k <= d; ++k) tc[static_cast<std::size_t>(k - 1 - i)] = x.coeff(static_cast<std::size_t>(k));
    c[static_cast<std::size_t>(i)] = Polynomial(std::move(tc));
  }
  return BiPoly(std::move(c));
}

BiPoly BiPoly::in_s(const Polynomial& p) {
  std::vector<Polynomial> c;
  for (const auto& a : p.coeffs()) c.push_back(Polynomial::constant(a));
  return BiPoly(std::move(c));
}

int BiPoly::degree_t() const noexcept {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

Polynomial BiPoly::at_t(const Rational& t0) const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& p : coeffs_) c.push_back(p(t0));
  return Polynomial(std::move(c));
}

Polynomial BiPoly::at_s(const Rational& s0) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s0 + *it;
  return acc;
}

Polynomial BiPoly::diagonal() const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * Polynomial::t() + *it;
  return acc;
}

BiPoly BiPoly::derivative_s() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Polynomial> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<unsigned long>(i)));
  return BiPoly(std::move(d));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return BiPoly(std::move(c));
}

BiPoly operator*(BiPoly a, const Polynomial& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.normalize();
  return a;
}

namespace {

// s^k * p
BiPoly shift_s(const BiPoly& p, std::size_t k) {
  std::vector<Polynomial> c(k);
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return BiPoly(std::move(c));
}

BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  const Polynomial& lb = b.leading();
  while (!r.is_zero() && r.degree_s() >= b.degree_s()) {
    const auto k = static_cast<std::size_t>(r.degree_s() - b.degree_s());
    BiPoly next = r * lb;
    next -= shift_s(b * r.leading(), k);
    r = std::move(next);
  }
  return r;
}

BiPoly normalized(BiPoly p) {
  if (p.is_zero()) return p;
  p = primitive_part(p);
  const Polynomial& lc = p.leading();
  return p * Polynomial::constant(1 / lc.leading());
}

}  // namespace

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
  return q;
}

Polynomial content(const BiPoly& p) {
  Polynomial g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  const Polynomial c = content(p);
  std::vector<Polynomial> out;
  for (const auto& x : p.coeffs()) out.push_back(exact_quotient(x, c));
  return BiPoly(std::move(out));
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  BiPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree_s() < y.degree_s()) std::swap(x, y);
  while (!y.is_zero() && y.degree_s() > 0) {
    BiPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  if (y.is_zero()) return normalized(x);
  return BiPoly({Polynomial::constant(1)});
}

BiPoly exact_quotient(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  BiPoly r = a;
  std::vector<Polynomial> q(static_cast<std::size_t>(std::max(0, a.degree_s() - b.degree_s() + 1)));
  while (!r.is_zero() && r.degree_s() >= b.degree_s()) {
    const auto k = static_cast<std::size_t>(r.degree_s() - b.degree_s());
    const Polynomial c = exact_quotient(r.leading(), b.leading());
    q[k] += c;
    r -= shift_s(b * c, k);
  }
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "bivariate division is not exact");
  return BiPoly(std::move(q));
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1);
  Polynomial prev = Polynomial::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// Rows of s^shift * p laid out over powers s^top .. s^0.
std::vector<Polynomial> row_of(const BiPoly& p, int shift, int top) {
  std::vector<Polynomial> row(static_cast<std::size_t>(top + 1));
  for (int i = 0; i <= p.degree_s(); ++i)
    row[static_cast<std::size_t>(top - (i + shift))] = p.coeffs()[static_cast<std::size_t>(i)];
  return row;
}

}  // namespace

Polynomial resultant_s(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int da = a.degree_s(), db = b.degree_s();
  if (da == 0) return pow(a.leading(), static_cast<unsigned>(db));
  if (db == 0) return pow(b.leading(), static_cast<unsigned>(da));
  const int top = da + db - 1;
  std::vector<std::vector<Polynomial>> m;
  for (int i = db - 1; i >= 0; --i) m.push_back(row_of(a, i, top));
  for (int i = da - 1; i >= 0; --i) m.push_back(row_of(b, i, top));
  return determinant(std::move(m));
}

std::pair<Polynomial, Polynomial> first_subresultant(const BiPoly& a, const BiPoly& b) {
  const BiPoly& big = a.degree_s() >= b.degree_s() ? a : b;
  const BiPoly& small = a.degree_s() >= b.degree_s() ? b : a;
  const int da = big.degree_s(), db = small.degree_s();
  if (db < 1) throw Error(ErrorKind::InvalidArgument, "first_subresultant needs positive s-degrees");
  if (db == 1) return {small.coeffs()[1], small.coeffs()[0]};

  const int top = da + db - 2;
  std::vector<std::vector<Polynomial>> rows;
  for (int i = db - 2; i >= 0; --i) rows.push_back(row_of(big, i, top));
  for (int i = da - 2; i >= 0; --i) rows.push_back(row_of(small, i, top));
  // Square matrices from the leading top-1 columns plus the s^1 or s^0 column.
  auto minor_with = [&](int power) {
    std::vector<std::vector<Polynomial>> m;
    for (const auto& r : rows) {
      std::vector<Polynomial> row(r.begin(), r.begin() + (top - 1));
      row.push_back(r[static_cast<std::size_t>(top - power)]);
      m.push_back(std::move(row));
    }
    return determinant(std::move(m));
  };
  return {minor_with(1), minor_with(0)};
}

}  // namespace jetworks
