#pragma once

// Small deterministic generators for the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "jetworks/jet.hpp"
#include "jetworks/polynomial.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }
inline double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline jetworks::Rational rational(long span = 9, long max_den = 6) {
  jetworks::Rational q(integer(-span, span), integer(1, max_den));
  q.canonicalize();
  return q;
}

inline jetworks::Jet jet(std::size_t order, long span = 9) {
  std::vector<jetworks::Rational> c(order + 1);
  for (auto& x : c) x = integer(0, 3) == 0 ? jetworks::Rational(0) : rational(span);
  return jetworks::Jet(std::move(c));
}

// Nonzero constant term.
inline jetworks::Jet unit(std::size_t order) {
  auto j = jet(order);
  std::vector<jetworks::Rational> c(j.coeffs().begin(), j.coeffs().end());
  while (c[0] == 0) c[0] = rational();
  return jetworks::Jet(std::move(c));
}

inline jetworks::Polynomial int_poly(int degree, long span) {
  std::vector<jetworks::Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = integer(-span, span);
  while (c.back() == 0) c.back() = integer(-span, span);
  return jetworks::Polynomial(std::move(c));
}

}  // namespace gen
