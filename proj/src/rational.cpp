#include "jetworks/rational.hpp"

#include <cctype>

#include "jetworks/error.hpp"

namespace jetworks {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::CoprimeRequired: return "CoprimeRequired";
    case ErrorKind::InconsistentPair: return "InconsistentPair";
    case ErrorKind::ExactRootUnavailable: return "ExactRootUnavailable";
    case ErrorKind::NoRealRoot: return "NoRealRoot";
    case ErrorKind::NoFrobenius: return "NoFrobenius";
    case ErrorKind::BelowThreshold: return "BelowThreshold";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::InconsistentSamples: return "InconsistentSamples";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::TooShort: return "TooShort";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto bad = [&](const char* why) {
    return Error(ErrorKind::InvalidArgument,
                 std::string("invalid rational '") + std::string(text) + "': " + why);
  };
  if (text.empty()) throw bad("empty");
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw bad("denominator must be a positive integer");
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) throw bad("numerator must be an integer");

  Rational q;
  q.get_num() = Integer(std::string(num));
  q.get_den() = den.empty() ? Integer(1) : Integer(std::string(den));
  if (q.get_den() == 0) throw bad("zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

std::optional<Rational> exact_root(const Rational& q, unsigned long m) {
  if (m == 0) return std::nullopt;
  if (m == 1) return q;
  const bool negative = sgn(q) < 0;
  if (negative && m % 2 == 0) return std::nullopt;

  Integer num = abs(q.get_num());
  Integer root_num, root_den;
  if (mpz_root(root_num.get_mpz_t(), num.get_mpz_t(), m) == 0) return std::nullopt;
  if (mpz_root(root_den.get_mpz_t(), q.get_den().get_mpz_t(), m) == 0) return std::nullopt;

  Rational r(negative ? Integer(-root_num) : root_num, root_den);
  r.canonicalize();
  return r;
}

}  // namespace jetworks
