#include "jetworks/joris.hpp"

#include <algorithm>

#include "jetworks/error.hpp"
#include "jetworks/numsg.hpp"

namespace jetworks::joris {

std::string_view to_string(SignSource s) noexcept {
  switch (s) {
    case SignSource::OddExponent: return "ODD_EXPONENT";
    case SignSource::Flat: return "FLAT";
    case SignSource::None: return "NONE";
  }
  return "NONE";
}

namespace {

void require_inputs(const Jet& a, const Jet& b, unsigned long m, unsigned long n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidArgument, "exponents must be positive");
  if (numsg::gcd(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)) != 1)
    throw Error(ErrorKind::CoprimeRequired,
                "gcd(" + std::to_string(m) + "," + std::to_string(n) + ") != 1");
  if (a.order() != b.order())
    throw Error(ErrorKind::OrderMismatch, "g^m and g^n jets must have the same order");
}

std::string val_str(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("FLAT");
}

// Coefficients of g^e up to this index depend only on g's coefficients up to
// `guaranteed` when val(g) = v.
std::size_t covered_order(std::size_t k, std::size_t guaranteed, std::size_t v, unsigned long e) {
  return std::min(k, guaranteed + (e - 1) * v);
}

void verify_power(const RecoveredJet& r, const Jet& input, unsigned long e, std::size_t v,
                  const char* label) {
  const std::size_t k = input.order();
  const std::size_t upto = r.sign_source == SignSource::Flat
                               ? k
                               : covered_order(k, r.guaranteed_order, v, e);
  const Jet powered = jet_pow(r.jet, e);
  for (std::size_t i = 0; i <= upto; ++i)
    if (powered[i] != input[i])
      throw Error(ErrorKind::InconsistentPair,
                  std::string("re-powering does not reproduce ") + label + " at coefficient " +
                      std::to_string(i));
}

}  // namespace

ConsistencyReport check_consistency(const Jet& a, const Jet& b, unsigned long m, unsigned long n) {
  require_inputs(a, b, m, n);
  const std::size_t k = a.order();
  const auto sa = hadamard_split(a);
  const auto sb = hadamard_split(b);

  ConsistencyReport rep{sa.valuation, sb.valuation, true, true, true, Verdict::Consistent, {}};
  auto fail = [&](std::string why) {
    if (rep.verdict == Verdict::Consistent) rep.reason = std::move(why);
    rep.verdict = Verdict::Inconsistent;
  };

  if (sa.flat() && sb.flat()) {
    rep.reason = "both powers are flat";
    return rep;
  }

  if (!sa.flat() && !sb.flat()) {
    rep.law_holds = *sa.valuation * n == *sb.valuation * m;
    rep.divisibility_holds = *sa.valuation % m == 0 && *sb.valuation % n == 0;
  } else {
    // One side vanishes to order K. That is only possible if the other side
    // forces val(g) high enough to push it past the truncation.
    const bool a_flat = sa.flat();
    const std::size_t val = a_flat ? *sb.valuation : *sa.valuation;
    const unsigned long e_visible = a_flat ? n : m;
    const unsigned long e_flat = a_flat ? m : n;
    rep.divisibility_holds = val % e_visible == 0;
    rep.law_holds = rep.divisibility_holds && (val / e_visible) * e_flat > k;
  }

  if (!rep.law_holds) {
    fail("valuation law Mn=Nm violated (M=" + val_str(sa.valuation) + ", N=" +
         val_str(sb.valuation) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  if (!rep.divisibility_holds) {
    fail("exponent does not divide valuation (M=" + val_str(sa.valuation) +
         ", N=" + val_str(sb.valuation) + ")");
  }
  if (m % 2 == 0 && !sa.flat() && (*sa.unit)[0] < 0) {
    rep.sign_ok = false;
    fail("even exponent m with negative leading coefficient in g^m");
  }
  if (n % 2 == 0 && !sb.flat() && (*sb.unit)[0] < 0) {
    rep.sign_ok = false;
    fail("even exponent n with negative leading coefficient in g^n");
  }
  if (rep.verdict == Verdict::Consistent) rep.reason = "consistent";
  return rep;
}

RecoveredJet recover_jet(const Jet& a, const Jet& b, unsigned long m, unsigned long n) {
  const auto rep = check_consistency(a, b, m, n);
  if (rep.verdict == Verdict::Inconsistent) throw Error(ErrorKind::InconsistentPair, rep.reason);

  const std::size_t k = a.order();
  std::size_t v = 0;
  RecoveredJet out{Jet(k), 0, SignSource::None};

  if (!rep.val_a && !rep.val_b) {
    // val(g^e) > K for both e forces val(g) > K / min(m, n).
    out.guaranteed_order = k / std::min(m, n);
    out.sign_source = SignSource::Flat;
  } else if (rep.val_a && rep.val_b) {
    v = *rep.val_a / m;
    const std::size_t precision = k - std::max(m, n) * v;
    const Jet unit_a = hadamard_split(a).unit->truncated(precision);
    const Jet unit_b = hadamard_split(b).unit->truncated(precision);
    // g = t^v * unit_b^b / unit_a^(-a) with a*m + b*n = 1.
    const auto bz = numsg::bezout_neg_pos(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
    const Jet unit = jet_div_exact(jet_pow(unit_b, static_cast<unsigned long>(bz.b)),
                                   jet_pow(unit_a, static_cast<unsigned long>(-bz.a)));
    out.jet = unit.shifted_up(v).padded(k);
    out.guaranteed_order = precision + v;
    out.sign_source = SignSource::OddExponent;
  } else {
    const bool use_a = rep.val_a.has_value();
    const unsigned long e = use_a ? m : n;
    const auto split = hadamard_split(use_a ? a : b);
    v = *split.valuation / e;
    // The hidden power has valuation beyond K, so v >= 1 and at least the
    // zero coefficients below v are certain.
    out.guaranteed_order = v - 1;
    if (e % 2 == 1) {
      try {
        const Jet root = jet_root_unit(*split.unit, e);
        out.jet = root.shifted_up(v).padded(k);
        out.guaranteed_order = root.order() + v;
        out.sign_source = SignSource::OddExponent;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::ExactRootUnavailable) throw;
      }
    }
  }

  verify_power(out, a, m, v, "g^m");
  verify_power(out, b, n, v, "g^n");
  return out;
}

RoundtripResult recover_roundtrip_check(const Jet& g, unsigned long m, unsigned long n) {
  try {
    const auto r = recover_jet(jet_pow(g, m), jet_pow(g, n), m, n);
    for (std::size_t i = 0; i <= r.guaranteed_order; ++i)
      if (r.jet[i] != g[i])
        return {false, "coefficient " + std::to_string(i) + " differs after recovery"};
    return {true, {}};
  } catch (const Error& e) {
    return {false, std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

}  // namespace jetworks::joris
