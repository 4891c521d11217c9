#include "jetworks/jet.hpp"

#include <algorithm>

#include "jetworks/error.hpp"

namespace jetworks {

namespace {

void require_same_order(const Jet& f, const Jet& g, const char* op) {
  if (f.order() != g.order())
    throw Error(ErrorKind::OrderMismatch, std::string(op) + ": jet orders differ (" +
                                              std::to_string(f.order()) + " vs " +
                                              std::to_string(g.order()) + ")");
}

}  // namespace

Jet::Jet(std::size_t order) : coeffs_(order + 1) {}

Jet::Jet(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "a jet needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

Jet Jet::constant(const Rational& c, std::size_t order) {
  Jet j(order);
  j.coeffs_[0] = c;
  return j;
}

Jet Jet::monomial(const Rational& c, std::size_t power, std::size_t order) {
  Jet j(order);
  if (power <= order) j.coeffs_[power] = c;
  return j;
}

bool Jet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<std::size_t> Jet::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

Jet Jet::truncated(std::size_t order) const {
  if (order > this->order())
    throw Error(ErrorKind::OrderMismatch, "cannot truncate a jet to a higher order");
  return Jet(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Jet Jet::padded(std::size_t order) const {
  if (order < this->order())
    throw Error(ErrorKind::OrderMismatch, "cannot pad a jet to a lower order");
  auto c = coeffs_;
  c.resize(order + 1);
  return Jet(std::move(c));
}

Jet Jet::resized(std::size_t order) const {
  return order <= this->order() ? truncated(order) : padded(order);
}

Jet Jet::shifted_up(std::size_t k) const {
  std::vector<Rational> c(k, Rational(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Jet(std::move(c));
}

Jet jet_linear_combine(const Rational& a, const Jet& f, const Rational& b, const Jet& g) {
  require_same_order(f, g, "jet_linear_combine");
  std::vector<Rational> c(f.order() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a * f[i] + b * g[i];
  return Jet(std::move(c));
}

Jet jet_mul(const Jet& f, const Jet& g) {
  require_same_order(f, g, "jet_mul");
  const std::size_t k = f.order();
  std::vector<Rational> c(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j <= k; ++j) c[i + j] += f[i] * g[j];
  }
  return Jet(std::move(c));
}

Jet jet_pow(const Jet& f, unsigned long e) {
  Jet result = Jet::constant(1, f.order());
  Jet base = f;
  while (e > 0) {
    if (e & 1UL) result = jet_mul(result, base);
    e >>= 1;
    if (e > 0) base = jet_mul(base, base);
  }
  return result;
}

Jet jet_compose(const Jet& f, const Jet& g) {
  require_same_order(f, g, "jet_compose");
  if (g[0] != 0)
    throw Error(ErrorKind::InvalidArgument, "jet_compose: inner jet must vanish at 0");
  // Horner: f(g) = c0 + g*(c1 + g*(c2 + ...)).
  const std::size_t k = f.order();
  Jet acc = Jet::constant(f[k], k);
  for (std::size_t i = k; i-- > 0;) {
    acc = jet_mul(acc, g);
    acc = jet_linear_combine(1, acc, f[i], Jet::constant(1, k));
  }
  return acc;
}

Jet jet_derivative(const Jet& f) {
  if (f.order() == 0)
    throw Error(ErrorKind::InvalidArgument, "jet_derivative: order-0 jet carries no derivative");
  std::vector<Rational> c(f.order());
  for (std::size_t i = 1; i <= f.order(); ++i) c[i - 1] = f[i] * static_cast<unsigned long>(i);
  return Jet(std::move(c));
}

HadamardSplit hadamard_split(const Jet& f) {
  auto v = f.valuation();
  if (!v) return {};
  auto c = f.coeffs();
  return {v, Jet(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(*v), c.end()))};
}

Jet jet_inverse(const Jet& u) {
  if (u[0] == 0) throw Error(ErrorKind::InvalidArgument, "jet_inverse: constant term is zero");
  const std::size_t k = u.order();
  std::vector<Rational> w(k + 1);
  w[0] = 1 / u[0];
  for (std::size_t n = 1; n <= k; ++n) {
    Rational s = 0;
    for (std::size_t j = 1; j <= n; ++j) s += u[j] * w[n - j];
    w[n] = -s * w[0];
  }
  return Jet(std::move(w));
}

Jet jet_div_exact(const Jet& f, const Jet& g) {
  auto gs = hadamard_split(g);
  if (gs.flat()) throw Error(ErrorKind::InvalidArgument, "jet_div_exact: divisor is flat");
  const std::size_t vg = *gs.valuation;
  const std::size_t common = std::min(f.order(), g.order());
  if (vg > common)
    throw Error(ErrorKind::InvalidArgument, "jet_div_exact: divisor valuation exceeds order");
  const std::size_t out_order = common - vg;

  auto fs = hadamard_split(f);
  if (fs.flat()) return Jet(out_order);
  const std::size_t vf = *fs.valuation;
  if (vg > vf)
    throw Error(ErrorKind::InvalidArgument,
                "jet_div_exact: divisor vanishes to higher order than dividend");

  const std::size_t shift = vf - vg;
  if (shift > out_order) return Jet(out_order);
  // Quotient of units is needed only up to out_order - shift, which both unit
  // precisions cover since vf >= vg.
  const std::size_t unit_order = out_order - shift;
  Jet q = jet_mul(fs.unit->truncated(unit_order), jet_inverse(gs.unit->truncated(unit_order)));
  return q.shifted_up(shift);
}

Jet jet_root_unit(const Jet& u, unsigned long m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "jet_root_unit: exponent must be positive");
  if (u[0] == 0) throw Error(ErrorKind::InvalidArgument, "jet_root_unit: input is not a unit");
  if (m % 2 == 0 && u[0] < 0)
    throw Error(ErrorKind::NoRealRoot, "jet_root_unit: even root of a negative constant term");
  auto c0 = exact_root(u[0], m);
  if (!c0)
    throw Error(ErrorKind::ExactRootUnavailable,
                "jet_root_unit: constant term " + to_string(u[0]) + " has no rational " +
                    std::to_string(m) + "-th root");

  // w = u^alpha satisfies u w' = alpha u' w; compare coefficients of t^(n-1).
  const Rational alpha(1, m);
  const std::size_t k = u.order();
  std::vector<Rational> w(k + 1);
  w[0] = *c0;
  for (std::size_t n = 1; n <= k; ++n) {
    Rational s = 0;
    for (std::size_t j = 1; j <= n; ++j)
      s += (alpha * static_cast<unsigned long>(j) - static_cast<long>(n - j)) * u[j] * w[n - j];
    w[n] = s / (u[0] * static_cast<unsigned long>(n));
  }
  return Jet(std::move(w));
}

Jet parse_jet(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty jet");
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    c.push_back(parse_rational(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Jet(std::move(c));
}

std::string format_jet(const Jet& f) {
  std::string out;
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (i) out += ',';
    out += to_string(f[i]);
  }
  return out;
}

}  // namespace jetworks
