#include "jetworks/numsg.hpp"

#include <numeric>
#include <string>

#include "jetworks/error.hpp"

namespace jetworks::numsg {

namespace {

void require_coprime(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1)
    throw Error(ErrorKind::InvalidArgument, "generators must be positive integers");
  if (gcd(m, n) != 1)
    throw Error(ErrorKind::CoprimeRequired,
                "gcd(" + std::to_string(m) + "," + std::to_string(n) + ") != 1");
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BezoutPair bezout_neg_pos(std::int64_t m, std::int64_t n) {
  require_coprime(m, n);
  // Extended Euclid for x with x*n = 1 (mod m).
  std::int64_t old_r = n % m, r = m, old_x = 1, x = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_x -= q * x;
    std::swap(old_x, x);
  }
  std::int64_t b = ((old_x % m) + m) % m;
  if (b == 0) b = m;  // m == 1
  // a = (1 - b n)/m is negative unless b*n == 1; step to the next solution.
  if (b * n <= 1) b += m;
  const std::int64_t a = (1 - b * n) / m;
  return {a, b, m, n};
}

std::int64_t frobenius(std::int64_t m, std::int64_t n) {
  require_coprime(m, n);
  if (m == 1 || n == 1)
    throw Error(ErrorKind::NoFrobenius, "a generator equal to 1 represents every integer");
  return m * n - m - n;
}

std::int64_t paper_threshold(std::int64_t m, std::int64_t n) {
  const auto bz = bezout_neg_pos(m, n);
  return -bz.a * m * n;
}

Representation represent_paper(std::int64_t m, std::int64_t n, std::int64_t r) {
  const auto bz = bezout_neg_pos(m, n);
  const std::int64_t threshold = -bz.a * m * n;
  if (r < threshold)
    throw Error(ErrorKind::BelowThreshold,
                std::to_string(r) + " is below the threshold " + std::to_string(threshold));
  const std::int64_t excess = r - threshold;
  const std::int64_t big_a = excess / n;
  const std::int64_t j = excess % n;
  return {-bz.a * (n - j), big_a + bz.b * j, r};
}

std::optional<Representation> represent_search(std::int64_t m, std::int64_t n, std::int64_t r) {
  if (m < 1 || n < 1 || r < 0)
    throw Error(ErrorKind::InvalidArgument, "represent_search needs m,n >= 1 and r >= 0");
  for (std::int64_t c1 = 0; c1 * m <= r; ++c1)
    if ((r - c1 * m) % n == 0) return Representation{c1, (r - c1 * m) / n, r};
  return std::nullopt;
}

}  // namespace jetworks::numsg
