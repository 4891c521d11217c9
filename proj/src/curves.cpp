#include "jetworks/curves.hpp"

#include <algorithm>

#include "jetworks/bivariate.hpp"
#include "jetworks/error.hpp"

namespace jetworks::curves {

namespace {

void require_nondegenerate(const PlaneCurve& c) {
  if (c.degenerate()) throw Error(ErrorKind::DegenerateCurve, "both components are constant");
}

struct Range {
  Rational lo, hi;
};

Range mul(const Range& a, const Range& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

// Enclosure of p over [lo, hi] by interval Horner evaluation.
Range enclose(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Range acc{0, 0};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = mul(acc, {lo, hi});
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

// Accumulates the outcome of the search for a coincidence pair.
struct Search {
  const PlaneCurve& curve;
  bool undecided = false;
  std::vector<RealRoot> witness;  // (s, t)
  std::string note;

  bool found() const { return !witness.empty(); }
};

// Real roots s != t0 of h in the curve's domain, for a rational t0.
bool find_partner(Search& st, const Polynomial& h, const Rational& t0) {
  if (h.degree() < 1) return false;
  const Polynomial hsf = squarefree_part(h);
  for (auto r : isolate_real_roots(hsf, st.curve.domain)) {
    r = sharpen_root(hsf, r);
    if (r.exact() ? r.lo == t0 : (r.lo < t0 && t0 < r.hi && hsf(t0) == 0)) continue;
    st.witness = {r, RealRoot{t0, t0}};
    return true;
  }
  return false;
}

// Cells of the t-domain between consecutive critical roots; returns one
// rational sample per open cell.
std::vector<Rational> cell_samples(const Interval& domain, const std::vector<RealRoot>& crit) {
  struct Edge {
    std::optional<Rational> value;
    bool exclusive;
  };
  std::vector<std::pair<Edge, Edge>> cells;
  Edge left{domain.lo, true};
  for (const auto& r : crit) {
    cells.push_back({left, Edge{r.lo, r.exact()}});
    left = Edge{r.hi, r.exact()};
  }
  cells.push_back({left, Edge{domain.hi, true}});

  std::vector<Rational> out;
  for (const auto& [l, r] : cells) {
    if (!l.value && !r.value) {
      out.emplace_back(0);
    } else if (!l.value) {
      out.push_back(*r.value - 1);
    } else if (!r.value) {
      out.push_back(*l.value + 1);
    } else if (*l.value < *r.value) {
      const Rational quarter = (*r.value - *l.value) / 4;
      out.push_back(simplest_rational(*l.value + quarter, *r.value - quarter));
    } else if (*l.value == *r.value && !l.exclusive && !r.exclusive) {
      out.push_back(*l.value);
    }
  }
  return out;
}

// Points of the curve G(s, t) = 0 with s != t, both in the domain.
void search_common_factor(Search& st, const BiPoly& g) {
  const Interval& dom = st.curve.domain;
  const BiPoly gsf = exact_quotient(g, gcd(g, g.derivative_s()));

  std::vector<Polynomial> factors{gsf.leading(), resultant_s(gsf, gsf.derivative_s()), gsf.diagonal()};
  if (dom.lo) factors.push_back(gsf.at_s(*dom.lo));
  if (dom.hi) factors.push_back(gsf.at_s(*dom.hi));
  Polynomial crit = Polynomial::constant(1);
  for (const auto& f : factors) {
    if (f.is_zero()) {
      st.undecided = true;
      st.note = "common factor does not admit a cell decomposition";
      return;
    }
    crit *= f;
  }

  std::vector<RealRoot> crit_roots;
  Polynomial crit_sf = squarefree_part(crit);
  if (crit_sf.degree() > 0)
    for (auto r : isolate_real_roots(crit_sf, dom)) crit_roots.push_back(sharpen_root(crit_sf, r));

  for (const auto& t0 : cell_samples(dom, crit_roots))
    if (dom.contains(t0) && find_partner(st, gsf.at_t(t0), t0)) return;

  std::vector<Rational> exact_points;
  if (dom.lo && dom.lo_closed) exact_points.push_back(*dom.lo);
  if (dom.hi && dom.hi_closed) exact_points.push_back(*dom.hi);
  for (const auto& r : crit_roots) {
    if (r.exact()) {
      exact_points.push_back(r.lo);
    } else {
      st.undecided = true;
      st.note = "irrational critical parameter on a common component";
    }
  }
  for (const auto& t0 : exact_points)
    if (find_partner(st, gsf.at_t(t0), t0)) return;
}

// Isolated common zeros of p and q (coprime in Q(t)[s]).
void search_isolated(Search& st, const BiPoly& p, const BiPoly& q) {
  const Interval& dom = st.curve.domain;
  const Polynomial r = resultant_s(p, q);
  if (r.degree() < 1) return;
  const Polynomial rsf = squarefree_part(r);
  std::optional<std::pair<Polynomial, Polynomial>> s1;

  for (auto root : isolate_real_roots(rsf, dom)) {
    root = sharpen_root(rsf, root);
    if (root.exact()) {
      const Rational& t0 = root.lo;
      if (find_partner(st, gcd(p.at_t(t0), q.at_t(t0)), t0)) return;
      continue;
    }
    if (!s1) s1 = first_subresultant(p, q);
    const auto& [lin1, lin0] = *s1;
    // Unique partner s* = -lin0/lin1 when lin1 does not vanish at t*.
    const int sign1 = sign_at_root(lin1, rsf, root);
    if (sign1 == 0) {
      st.undecided = true;
      st.note = "several common roots over an irrational parameter";
      continue;
    }
    if (sign_at_root(lin0 + lin1 * Polynomial::t(), rsf, root) == 0) continue;  // s* == t*
    bool inside = true;
    if (dom.lo) {
      const int s = -sign_at_root(lin0 + lin1 * *dom.lo, rsf, root) * sign1;
      inside = inside && (s > 0 || (s == 0 && dom.lo_closed));
    }
    if (dom.hi) {
      const int s = sign_at_root(lin0 + lin1 * *dom.hi, rsf, root) * sign1;
      inside = inside && (s > 0 || (s == 0 && dom.hi_closed));
    }
    if (!inside) continue;

    // Enclose s* once t* is pinned tightly enough that lin1 keeps its sign.
    RealRoot t = root;
    Range num{}, den{};
    for (Rational width = (t.hi - t.lo) / 2;; width /= 2) {
      t = refine_root(rsf, t, width);
      num = enclose(-lin0, t.lo, t.hi);
      den = enclose(lin1, t.lo, t.hi);
      if (sgn(den.lo) == sgn(den.hi) && sgn(den.lo) != 0) break;
    }
    const Rational c[4] = {num.lo / den.lo, num.lo / den.hi, num.hi / den.lo, num.hi / den.hi};
    st.witness = {RealRoot{*std::min_element(c, c + 4), *std::max_element(c, c + 4)}, t};
    st.note = "coincidence at irrational parameters; witness entries are enclosures";
    return;
  }
}

}  // namespace

ThreeValued immersion_test(const PlaneCurve& c) {
  require_nondegenerate(c);
  const Polynomial g = gcd(c.x.derivative(), c.y.derivative());
  if (g.degree() < 1) return {Truth::True, {}, "x' and y' have no common zero"};
  const Polynomial gsf = squarefree_part(g);
  const auto roots = isolate_real_roots(gsf, c.domain);
  if (roots.empty()) return {Truth::True, {}, "x' and y' have no common real zero in the domain"};
  return {Truth::False, {sharpen_root(gsf, roots.front())}, "x' and y' vanish together"};
}

ThreeValued injectivity_test(const PlaneCurve& c, const CurveOptions& opts) {
  require_nondegenerate(c);
  if (c.x.degree() > opts.max_degree || c.y.degree() > opts.max_degree)
    throw Error(ErrorKind::ResourceLimit, "component degree exceeds the limit " + std::to_string(opts.max_degree));
  if (c.domain.empty()) return {Truth::True, {}, "empty domain"};

  // x(s) = x(t), y(s) = y(t) with s != t  <=>  p(s,t) = q(s,t) = 0, s != t.
  const BiPoly p = BiPoly::divided_difference(c.x);
  const BiPoly q = BiPoly::divided_difference(c.y);
  const BiPoly g = gcd(p, q);

  Search st{c, false, {}, {}};
  if (g.degree_s() >= 1) {
    search_common_factor(st, g);
    if (st.found()) return {Truth::False, st.witness, "coincidence on a common component"};
  }
  if (!p.is_zero() && !q.is_zero()) {
    const BiPoly p2 = exact_quotient(p, g), q2 = exact_quotient(q, g);
    if (p2.degree_s() >= 1 && q2.degree_s() >= 1) {
      search_isolated(st, p2, q2);
    } else if ((p2.degree_s() == 0 && p2.leading().degree() > 0) ||
               (q2.degree_s() == 0 && q2.leading().degree() > 0)) {
      st.undecided = true;
      st.note = "cofactor depends on t only";
    }
  }
  if (st.found()) return {Truth::False, st.witness, st.note.empty() ? "coincidence pair" : st.note};
  if (st.undecided) return {Truth::Unknown, {}, st.note};
  return {Truth::True, {}, "no pair s != t with equal images"};
}

VanishingOrders vanishing_orders(const PlaneCurve& c, const Rational& t0) {
  if (!c.domain.contains(t0))
    throw Error(ErrorKind::InvalidArgument, "point " + to_string(t0) + " is outside the domain");
  auto order = [&](const Polynomial& z) -> std::optional<int> {
    if (z.is_constant()) return std::nullopt;
    const Polynomial w = z.shifted(t0) - Polynomial::constant(z(t0));
    for (int i = 0; i <= w.degree(); ++i)
      if (w.coeffs()[static_cast<std::size_t>(i)] != 0) return i;
    return std::nullopt;
  };
  return {order(c.x), order(c.y)};
}

bool is_coincidence(const PlaneCurve& c, const Rational& s, const Rational& t) {
  return s != t && c.domain.contains(s) && c.domain.contains(t) && c.x(s) == c.x(t) && c.y(s) == c.y(t);
}

}  // namespace jetworks::curves
