#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace jetworks {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" with an optional leading '-' on p; q must be a positive
// integer. The result is canonical.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

int sign(const Rational& q);

// Exact real m-th root of q if one exists in Q. For even m the non-negative
// root is returned; negative q with even m yields nullopt.
std::optional<Rational> exact_root(const Rational& q, unsigned long m);

}  // namespace jetworks
