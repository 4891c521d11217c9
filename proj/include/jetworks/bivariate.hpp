#pragma once

#include <utility>
#include <vector>

#include "jetworks/polynomial.hpp"

namespace jetworks {

// Polynomial in s whose coefficients are polynomials in t, i.e. Q[t][s].
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Polynomial> coeffs);

  // (x(s) - x(t)) / (s - t), computed exactly.
  static BiPoly divided_difference(const Polynomial& x);
  // p(s), independent of t.
  static BiPoly in_s(const Polynomial& p);

  const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }
  int degree_s() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_t() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Polynomial& leading() const { return coeffs_.back(); }

  // Fix t = t0: a polynomial in s.
  Polynomial at_t(const Rational& t0) const;
  // Fix s = s0: a polynomial in t.
  Polynomial at_s(const Rational& s0) const;
  // Restrict to the diagonal s = t.
  Polynomial diagonal() const;

  BiPoly derivative_s() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Polynomial& c);

  bool operator==(const BiPoly&) const = default;

 private:
  void normalize();
  std::vector<Polynomial> coeffs_;
};

// Exact quotient in Q[t]; throws if b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Content (monic gcd of the Q[t] coefficients) and primitive part.
Polynomial content(const BiPoly& p);
BiPoly primitive_part(const BiPoly& p);

// Primitive gcd in Q[t][s], normalized to a monic leading coefficient when
// that coefficient is constant. Returns 1 for coprime inputs.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

// Exact quotient a / b in Q[t][s]; throws if not exact.
BiPoly exact_quotient(const BiPoly& a, const BiPoly& b);

// Resultant with respect to s, via the Sylvester determinant.
Polynomial resultant_s(const BiPoly& a, const BiPoly& b);

// First subresultant S1 = lin1(t)*s + lin0(t) of a and b with respect to s.
// When the smaller s-degree is 1 the linear input itself is returned.
// Requires both s-degrees >= 1.
std::pair<Polynomial, Polynomial> first_subresultant(const BiPoly& a, const BiPoly& b);

// Determinant over Q[t] (fraction-free elimination).
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

}  // namespace jetworks
