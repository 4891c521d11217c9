#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetworks/rational.hpp"

namespace jetworks {

// A truncated power series at 0: coefficients c_0..c_K of t^0..t^K over Q.
// The truncation order K is part of the value; two jets of different order
// are never silently mixed.
class Jet {
 public:
  explicit Jet(std::size_t order);  // zero jet
  explicit Jet(std::vector<Rational> coeffs);

  static Jet constant(const Rational& c, std::size_t order);
  static Jet monomial(const Rational& c, std::size_t power, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const;
  // Index of the first nonzero coefficient; nullopt for the zero jet.
  std::optional<std::size_t> valuation() const;

  // Drop or zero-pad coefficients to reach the new order.
  Jet truncated(std::size_t order) const;
  Jet padded(std::size_t order) const;
  Jet resized(std::size_t order) const;

  // Multiply by t^k; the order grows with the shift so nothing is lost.
  Jet shifted_up(std::size_t k) const;

  bool operator==(const Jet&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

// t^valuation * unit, or FLAT when every coefficient vanishes.
struct HadamardSplit {
  std::optional<std::size_t> valuation;
  std::optional<Jet> unit;

  bool flat() const noexcept { return !valuation.has_value(); }
};

Jet jet_linear_combine(const Rational& a, const Jet& f, const Rational& b, const Jet& g);
Jet jet_mul(const Jet& f, const Jet& g);
Jet jet_pow(const Jet& f, unsigned long e);
Jet jet_compose(const Jet& f, const Jet& g);
Jet jet_derivative(const Jet& f);
HadamardSplit hadamard_split(const Jet& f);

// Quotient f/g as a jet. Requires val(g) <= val(f); the result has order
// min(f.order, g.order) - val(g).
Jet jet_div_exact(const Jet& f, const Jet& g);

// Multiplicative inverse of a unit (nonzero constant term), same order.
Jet jet_inverse(const Jet& u);

// The m-th root of a unit whose constant term has an exact rational m-th
// root; positive root for even m.
Jet jet_root_unit(const Jet& u, unsigned long m);

// Text form "c0,c1/d1,...".
Jet parse_jet(std::string_view text);
std::string format_jet(const Jet& f);

}  // namespace jetworks
