#pragma once

// Root counting without Sturm chains, for cross-checking. Rational roots come
// from the rational root theorem and are divided out exactly; the remaining
// roots are sign changes on a fine grid. Repeated irrational roots would be
// missed, which random integer inputs essentially never produce.

#include <cmath>
#include <cstdlib>
#include <set>
#include <vector>

#include "jetworks/polynomial.hpp"

namespace oracle {

using jetworks::Integer;
using jetworks::Rational;

inline Rational eval(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<long> divisors(Integer v) {
  v = abs(v);
  std::vector<long> out;
  for (long d = 1; d <= v; ++d)
    if (v % d == 0) out.push_back(d);
  return out;
}

// Divides c by (t - r), assuming r is a root.
inline std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c.size() - 1; i > 0; --i) {
    carry = carry * r + c[i];
    q[i - 1] = carry;
  }
  return q;
}

inline std::size_t root_count(const jetworks::Polynomial& p, long lo, long hi, long cells = 200000) {
  std::vector<Rational> c = p.coeffs();
  std::set<Rational> rational_roots;
  bool progress = true;
  while (c.size() > 1 && progress) {
    progress = false;
    if (c[0] == 0) {
      rational_roots.insert(0);
      c.erase(c.begin());
      progress = true;
      continue;
    }
    for (long d : divisors(c[0].get_num())) {
      for (long e : divisors(c.back().get_num())) {
        for (int s : {1, -1}) {
          const Rational r(s * d, e);
          if (c.size() > 1 && eval(c, r) == 0) {
            rational_roots.insert(r);
            c = deflate(c, r);
            progress = true;
          }
        }
      }
    }
  }
  std::size_t count = 0;
  for (const auto& r : rational_roots)
    if (r > lo && r <= hi) ++count;
  if (c.size() <= 1) return count;

  double scale = 0;
  std::vector<double> cd;
  for (const auto& x : c) {
    cd.push_back(x.get_d());
    scale = std::max(scale, std::fabs(cd.back()));
  }
  auto sign_at = [&](long i) {
    const double xd = static_cast<double>(lo) + static_cast<double>(i) * static_cast<double>(hi - lo) / static_cast<double>(cells);
    double acc = 0, mag = 0;
    for (auto it = cd.rbegin(); it != cd.rend(); ++it) {
      acc = acc * xd + *it;
      mag = mag * std::fabs(xd) + std::fabs(*it);
    }
    if (std::fabs(acc) > 1e-10 * mag) return acc > 0 ? 1 : -1;
    const Rational v = eval(c, Rational(lo) + Rational(i * (hi - lo), cells));
    return v > 0 ? 1 : -1;  // never zero: no rational roots remain
  };
  int prev = sign_at(0);
  for (long i = 1; i <= cells; ++i) {
    const int s = sign_at(i);
    if (s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace oracle
