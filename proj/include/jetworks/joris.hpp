#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "jetworks/jet.hpp"

namespace jetworks::joris {

enum class SignSource { OddExponent, Flat, None };

std::string_view to_string(SignSource s) noexcept;

// A reconstructed jet of g. Coefficients above guaranteed_order are zero
// placeholders, not data.
struct RecoveredJet {
  Jet jet;
  std::size_t guaranteed_order;
  SignSource sign_source;
};

enum class Verdict { Consistent, Inconsistent };

struct ConsistencyReport {
  std::optional<std::size_t> val_a;  // nullopt: FLAT
  std::optional<std::size_t> val_b;
  bool law_holds;           // val_a*n == val_b*m (or the missing side is truncated away)
  bool divisibility_holds;  // m | val_a and n | val_b
  bool sign_ok;             // no even exponent with a negative unit
  Verdict verdict;
  std::string reason;
};

// Necessary valuation conditions for (A, B) = (g^m, g^n) at order K.
// A FLAT side is accepted when the other side's implied val(g) puts it
// beyond the truncation order.
ConsistencyReport check_consistency(const Jet& a, const Jet& b, unsigned long m, unsigned long n);

// Reconstruct the jet of g from jets A = g^m, B = g^n of equal order.
// When only one power is visible and it is even, or its unit has no
// rational root, only the zeros below val(g) are certified (sign NONE).
RecoveredJet recover_jet(const Jet& a, const Jet& b, unsigned long m, unsigned long n);

struct RoundtripResult {
  bool ok;
  std::string reason;
};

RoundtripResult recover_roundtrip_check(const Jet& g, unsigned long m, unsigned long n);

}  // namespace jetworks::joris
