#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jetworks/rational.hpp"

namespace jetworks {

// Dense univariate polynomial over Q; coeffs()[i] multiplies t^i. Trailing
// zeros are always stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial t() { return monomial(1, 1); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  // p(q(t))
  Polynomial compose(const Polynomial& q) const;
  // p(t + c)
  Polynomial shifted(const Rational& c) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial operator-() const { return *this * Rational(-1); }

  bool operator==(const Polynomial&) const = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned e);

// Euclidean division: a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial squarefree_part(const Polynomial& p);

std::string format_poly(const Polynomial& p);

// Grammar:
//   expr := term (('+'|'-') term)*     term := factor ('*' factor)*
//   factor := base ('^' uint)?         base := rational | 't' | '(' expr ')'
//   rational := int ('/' uint)?
// A '-' in front of a term that does not start with a digit negates the
// term, so "-t^2" reads as -(t^2). Whitespace is ignored. Throws ParseError with the byte offset, or
// ResourceLimit when an intermediate degree exceeds max_degree.
Polynomial parse_poly(std::string_view text, int max_degree = 64);

// An interval of the real line with rational or infinite endpoints.
struct Interval {
  std::optional<Rational> lo;  // nullopt: -inf
  std::optional<Rational> hi;  // nullopt: +inf
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval real_line() { return {}; }
  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
  bool contains(const Rational& x) const;
  bool empty() const;
};

// Parses "LO..HI" (open) optionally wrapped as "[LO..HI)" etc.; "inf" and
// "-inf" are accepted as endpoints.
Interval parse_interval(std::string_view text);
std::string format_interval(const Interval& d);

// Number of distinct real roots of p in (lo, hi]; nullopt endpoints are
// -inf / +inf respectively.
std::size_t sturm_count(const Polynomial& p, const std::optional<Rational>& lo,
                        const std::optional<Rational>& hi);

// A real root given exactly (lo == hi) or by an open isolating interval
// (lo, hi) containing exactly one root of the defining squarefree polynomial.
struct RealRoot {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Distinct real roots of p inside the domain, in increasing order.
std::vector<RealRoot> isolate_real_roots(const Polynomial& p, const Interval& domain);

// Shrinks an isolating interval of a root of squarefree `defining` below the
// given width (or until the root is hit exactly).
RealRoot refine_root(const Polynomial& defining, RealRoot root, const Rational& width);

// Refines the interval and returns the root exactly when it is a rational
// with a small denominator.
RealRoot sharpen_root(const Polynomial& defining, RealRoot root);

// The rational with the smallest denominator in [lo, hi].
Rational simplest_rational(const Rational& lo, const Rational& hi);

// Sign of f at the root of squarefree `defining` isolated by `root`; exact.
int sign_at_root(const Polynomial& f, const Polynomial& defining, const RealRoot& root);

}  // namespace jetworks
