#pragma once

#include <cstdint>
#include <optional>

namespace jetworks::numsg {

// a*m + b*n == 1 with a < 0 < b. The canonical choice is the least positive b
// with b*n = 1 (mod m) that still leaves a negative.
struct BezoutPair {
  std::int64_t a;
  std::int64_t b;
  std::int64_t m;
  std::int64_t n;
};

// c1*m + c2*n == r with c1, c2 >= 0.
struct Representation {
  std::int64_t c1;
  std::int64_t c2;
  std::int64_t r;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);

BezoutPair bezout_neg_pos(std::int64_t m, std::int64_t n);

// Largest integer that is not a non-negative combination of m and n.
std::int64_t frobenius(std::int64_t m, std::int64_t n);

// Smallest r for which represent_paper applies: (-a)*m*n.
std::int64_t paper_threshold(std::int64_t m, std::int64_t n);

// Witness r = (-a)(n-j)m + (A+bj)n from r = (-a)mn + An + j, 0 <= j < n.
Representation represent_paper(std::int64_t m, std::int64_t n, std::int64_t r);

// Lexicographically least (c1, c2), by exhaustive scan.
std::optional<Representation> represent_search(std::int64_t m, std::int64_t n, std::int64_t r);

}  // namespace jetworks::numsg
