#include "jetworks/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "jetworks/error.hpp"

namespace jetworks {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  const Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
  return compose(Polynomial({c, Rational(1)}));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(1), base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * inv;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) {
      out += mag.get_str();
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int max_degree) : text_(text), max_degree_(max_degree) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() { return at_end() ? '\0' : text_[pos_]; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  void check_degree(const Polynomial& p) const {
    if (p.degree() > max_degree_)
      throw Error(ErrorKind::ResourceLimit, "polynomial degree " + std::to_string(p.degree()) +
                                                " exceeds the limit " + std::to_string(max_degree_));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
  }

  Polynomial term() {
    // A sign not followed by digits negates the whole term: -t^2 = -(t^2).
    if (peek() == '-') {
      std::size_t next = pos_ + 1;
      while (next < text_.size() && std::isspace(static_cast<unsigned char>(text_[next]))) ++next;
      if (next >= text_.size() || !is_digit(text_[next])) {
        ++pos_;
        return -term();
      }
    }
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
      check_degree(acc);
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6 || std::stol(d) > max_degree_)
      throw Error(ErrorKind::ResourceLimit, "exponent at offset " + std::to_string(at) +
                                                " exceeds the degree limit " + std::to_string(max_degree_));
    const auto e = static_cast<unsigned>(std::stoul(d));
    if (b.degree() > 0 && static_cast<long>(b.degree()) * e > max_degree_)
      throw Error(ErrorKind::ResourceLimit, "power at offset " + std::to_string(at) +
                                                " exceeds the degree limit " + std::to_string(max_degree_));
    return pow(b, e);
  }

  Polynomial base() {
    const char c = peek();
    if (c == 't') {
      ++pos_;
      return Polynomial::t();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-' || is_digit(c)) return Polynomial::constant(rational());
    if (c == '\0') throw ParseError(pos_, "unexpected end of input");
    throw ParseError(pos_, "unexpected character '" + std::string(1, c) + "'");
  }

  Rational rational() {
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    Rational q{Integer(digits())};
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Integer den(digits());
      if (den == 0) throw ParseError(at, "zero denominator");
      q /= Rational(den);
    }
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_degree_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, int max_degree) {
  return PolyParser(text, max_degree).parse();
}

// ---------------------------------------------------------------------------
// Intervals

bool Interval::contains(const Rational& x) const {
  if (lo && (lo_closed ? x < *lo : x <= *lo)) return false;
  if (hi && (hi_closed ? x > *hi : x >= *hi)) return false;
  return true;
}

bool Interval::empty() const {
  if (!lo || !hi) return false;
  if (*lo < *hi) return false;
  return !(*lo == *hi && lo_closed && hi_closed);
}

Interval parse_interval(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::InvalidArgument, "invalid domain '" + std::string(text) + "': " + why);
  };
  Interval d;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '[' || body.front() == '(')) {
    d.lo_closed = body.front() == '[';
    body.remove_prefix(1);
  }
  if (!body.empty() && (body.back() == ']' || body.back() == ')')) {
    d.hi_closed = body.back() == ']';
    body.remove_suffix(1);
  }
  const auto sep = body.find("..");
  if (sep == std::string_view::npos) throw bad("expected LO..HI");
  auto lo = body.substr(0, sep), hi = body.substr(sep + 2);
  if (lo == "-inf") {
    if (d.lo_closed) throw bad("an infinite endpoint cannot be closed");
  } else {
    d.lo = parse_rational(lo);
  }
  if (hi == "inf" || hi == "+inf") {
    if (d.hi_closed) throw bad("an infinite endpoint cannot be closed");
  } else {
    d.hi = parse_rational(hi);
  }
  if (d.empty()) throw bad("empty interval");
  return d;
}

std::string format_interval(const Interval& d) {
  std::string out = d.lo_closed ? "[" : "(";
  out += d.lo ? to_string(*d.lo) : "-inf";
  out += "..";
  out += d.hi ? to_string(*d.hi) : "inf";
  out += d.hi_closed ? "]" : ")";
  return out;
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{squarefree_part(p)};
  chain.push_back(chain[0].derivative());
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// x == nullopt with `at_plus_inf` selects +inf or -inf.
std::size_t variations_at(const std::vector<Polynomial>& chain, const std::optional<Rational>& x,
                          bool at_plus_inf) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    if (x) {
      signs.push_back(sgn(q(*x)));
    } else {
      int s = sgn(q.leading());
      if (!at_plus_inf && q.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
  }
  return variations(signs);
}

// Roots of squarefree p in the open interval (a, b).
std::size_t count_open(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
  const std::size_t half_open = variations_at(chain, a, false) - variations_at(chain, b, true);
  return half_open - (chain[0](b) == 0 ? 1 : 0);
}

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(i)]) / lc));
  return m + 1;
}

void isolate(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b,
             std::size_t count, std::vector<RealRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b});
    return;
  }
  const Rational mid = (a + b) / 2;
  const bool hit = chain[0](mid) == 0;
  const std::size_t left = count_open(chain, a, mid);
  isolate(chain, a, mid, left, out);
  if (hit) out.push_back({mid, mid});
  isolate(chain, mid, b, count - left - (hit ? 1 : 0), out);
}

}  // namespace

std::size_t sturm_count(const Polynomial& p, const std::optional<Rational>& lo,
                        const std::optional<Rational>& hi) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "sturm_count of the zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  const std::size_t vlo = variations_at(chain, lo, false);
  const std::size_t vhi = variations_at(chain, hi, true);
  return vlo - vhi;
}

std::vector<RealRoot> isolate_real_roots(const Polynomial& p, const Interval& domain) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot isolate roots of the zero polynomial");
  std::vector<RealRoot> out;
  if (p.degree() == 0 || domain.empty()) return out;
  const auto chain = sturm_chain(p);
  const Rational bound = cauchy_bound(chain[0]);
  const Rational a = domain.lo ? *domain.lo : Rational(-bound);
  const Rational b = domain.hi ? *domain.hi : bound;
  if (domain.lo && domain.lo_closed && chain[0](a) == 0) out.push_back({a, a});
  if (a < b) isolate(chain, a, b, count_open(chain, a, b), out);
  if (domain.hi && domain.hi_closed && chain[0](b) == 0 && a < b) out.push_back({b, b});
  return out;
}

RealRoot refine_root(const Polynomial& defining, RealRoot root, const Rational& width) {
  if (root.exact()) return root;
  const auto chain = sturm_chain(defining);
  while (root.hi - root.lo > width) {
    const Rational mid = root.midpoint();
    if (chain[0](mid) == 0) return {mid, mid};
    if (count_open(chain, root.lo, mid) == 1) root.hi = mid;
    else root.lo = mid;
  }
  return root;
}

Rational simplest_rational(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational frac = simplest_rational(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / frac;
}

RealRoot sharpen_root(const Polynomial& defining, RealRoot root) {
  if (root.exact()) return root;
  root = refine_root(defining, root, Rational(1, 1UL << 40) / (1UL << 24));
  if (root.exact()) return root;
  const Rational guess = simplest_rational(root.lo, root.hi);
  if (defining(guess) == 0) return {guess, guess};
  return root;
}

int sign_at_root(const Polynomial& f, const Polynomial& defining, const RealRoot& root) {
  if (root.exact()) return sgn(f(root.lo));
  if (f.is_zero()) return 0;
  if (f.degree() == 0) return sgn(f.leading());
  const auto g = gcd(defining, f);
  if (g.degree() > 0 && count_open(sturm_chain(g), root.lo, root.hi) > 0) return 0;
  const auto def_chain = sturm_chain(defining);
  const auto f_chain = sturm_chain(f);
  RealRoot r = root;
  while (count_open(f_chain, r.lo, r.hi) > 0) {
    const Rational mid = r.midpoint();
    if (def_chain[0](mid) == 0) return sgn(f(mid));
    if (count_open(def_chain, r.lo, mid) == 1) r.hi = mid;
    else r.lo = mid;
  }
  return sgn(f(r.midpoint()));
}

}  // namespace jetworks
