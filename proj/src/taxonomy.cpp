#include "jetworks/taxonomy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "jetworks/error.hpp"

namespace jetworks::taxonomy {

std::string_view to_string(Predicate p) noexcept {
  switch (p) {
    case Predicate::Immersion: return "IMMERSION";
    case Predicate::Injective: return "INJECTIVE";
    case Predicate::LocallyInjective: return "LOCALLY_INJECTIVE";
    case Predicate::PseudoImmersion: return "PSEUDO_IMMERSION";
    case Predicate::Induction: return "INDUCTION";
    case Predicate::LocalInduction: return "LOCAL_INDUCTION";
    case Predicate::WeakEmbedding: return "WEAK_EMBEDDING";
    case Predicate::TopologicalEmbedding: return "TOPOLOGICAL_EMBEDDING";
  }
  return "?";
}

std::optional<Predicate> predicate_from_string(std::string_view name) noexcept {
  for (auto p : all_predicates())
    if (to_string(p) == name) return p;
  return std::nullopt;
}

FactSet::FactSet(std::initializer_list<std::pair<Predicate, Truth>> seeds) : FactSet() {
  for (const auto& [p, v] : seeds) set(p, v);
}

std::size_t FactSet::known_count() const {
  std::size_t n = 0;
  for (auto v : values_) n += v != Truth::Unknown;
  return n;
}

const std::vector<Rule>& rules() {
  using P = Predicate;
  static const std::vector<Rule> table = {
      // R1 induction => injective
      {"R1", {{P::Induction, true}}, {P::Injective, true}},
      {"R1", {{P::Injective, false}}, {P::Induction, false}},
      // R2 induction => pseudo-immersion
      {"R2", {{P::Induction, true}}, {P::PseudoImmersion, true}},
      {"R2", {{P::PseudoImmersion, false}}, {P::Induction, false}},
      // R3 immersion => pseudo-immersion
      {"R3", {{P::Immersion, true}}, {P::PseudoImmersion, true}},
      {"R3", {{P::PseudoImmersion, false}}, {P::Immersion, false}},
      // R4 immersion => local induction
      {"R4", {{P::Immersion, true}}, {P::LocalInduction, true}},
      {"R4", {{P::LocalInduction, false}}, {P::Immersion, false}},
      // R5 local induction <=> locally injective and pseudo-immersion
      {"R5", {{P::LocalInduction, true}}, {P::LocallyInjective, true}},
      {"R5", {{P::LocalInduction, true}}, {P::PseudoImmersion, true}},
      {"R5", {{P::LocallyInjective, true}, {P::PseudoImmersion, true}}, {P::LocalInduction, true}},
      {"R5", {{P::LocallyInjective, false}}, {P::LocalInduction, false}},
      {"R5", {{P::PseudoImmersion, false}}, {P::LocalInduction, false}},
      {"R5", {{P::LocalInduction, false}, {P::LocallyInjective, true}}, {P::PseudoImmersion, false}},
      {"R5", {{P::LocalInduction, false}, {P::PseudoImmersion, true}}, {P::LocallyInjective, false}},
      // R6 weak embedding <=> induction and immersion
      {"R6", {{P::WeakEmbedding, true}}, {P::Induction, true}},
      {"R6", {{P::WeakEmbedding, true}}, {P::Immersion, true}},
      {"R6", {{P::Induction, true}, {P::Immersion, true}}, {P::WeakEmbedding, true}},
      {"R6", {{P::Induction, false}}, {P::WeakEmbedding, false}},
      {"R6", {{P::Immersion, false}}, {P::WeakEmbedding, false}},
      {"R6", {{P::WeakEmbedding, false}, {P::Induction, true}}, {P::Immersion, false}},
      {"R6", {{P::WeakEmbedding, false}, {P::Immersion, true}}, {P::Induction, false}},
      // R7 injective => locally injective
      {"R7", {{P::Injective, true}}, {P::LocallyInjective, true}},
      {"R7", {{P::LocallyInjective, false}}, {P::Injective, false}},
      // R8 topological embedding and pseudo-immersion => induction.
      // TOPOLOGICAL_EMBEDDING is only ever seeded, so its contrapositive
      // toward that predicate is omitted.
      {"R8", {{P::TopologicalEmbedding, true}, {P::PseudoImmersion, true}}, {P::Induction, true}},
      {"R8", {{P::TopologicalEmbedding, true}, {P::Induction, false}}, {P::PseudoImmersion, false}},
  };
  return table;
}

Closure infer_closure(const FactSet& seeds, const std::vector<std::size_t>* order) {
  const auto& table = rules();
  std::vector<std::size_t> idx(table.size());
  if (order) {
    if (order->size() != table.size())
      throw Error(ErrorKind::InvalidArgument, "rule order must be a permutation of all rules");
    idx = *order;
  } else {
    std::iota(idx.begin(), idx.end(), 0);
  }

  Closure out{seeds, false, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i : idx) {
      const Rule& r = table.at(i);
      bool fires = true;
      for (const auto& lit : r.premises)
        fires = fires && out.facts.get(lit.pred) == from_bool(lit.value);
      if (!fires) continue;
      const Truth want = from_bool(r.conclusion.value);
      const Truth have = out.facts.get(r.conclusion.pred);
      if (have == want) continue;
      if (have != Truth::Unknown) {
        out.contradiction = true;
        out.conflict = std::string(r.id) + " forces " + std::string(to_string(r.conclusion.pred)) +
                       "=" + std::string(jetworks::to_string(want));
        return out;
      }
      out.facts.set(r.conclusion.pred, want);
      changed = true;
    }
  }
  return out;
}

Closure classify_monomial(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "monomial exponents must be positive");
  FactSet seeds{
      {Predicate::Induction, from_bool(std::gcd(a, b) == 1)},
      {Predicate::Immersion, from_bool(std::min(a, b) == 1)},
      {Predicate::Injective, from_bool(a % 2 == 1 || b % 2 == 1)},
  };
  return infer_closure(seeds);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

using P = Predicate;
constexpr Truth T = Truth::True;
constexpr Truth F = Truth::False;

FactSet expected_of(std::initializer_list<std::pair<Predicate, Truth>> v) { return FactSet(v); }

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;

    curves::PlaneCurve cusp{Polynomial::monomial(1, 3), Polynomial::monomial(1, 2), Interval::real_line()};
    e.push_back({"cusp",
                 "t -> (t^3, t^2) on R, parametrizing the cusp x^2 = y^3",
                 {{P::Induction, T}, {P::Immersion, F}},
                 {"INDUCTION: g is smooth iff g^2 and g^3 are smooth (Joris' theorem), so a map p with "
                  "(p^3, p^2) smooth is smooth",
                  "IMMERSION: the velocity (3t^2, 2t) vanishes at t = 0"},
                 cusp,
                 "cusp_curve",
                 expected_of({{P::Immersion, F}, {P::Injective, T}, {P::LocallyInjective, T},
                              {P::PseudoImmersion, T}, {P::Induction, T}, {P::LocalInduction, T},
                              {P::WeakEmbedding, F}})});

    e.push_back({"figure_eight",
                 "t -> (sin t, sin 2t) for 0 < t < 2*pi",
                 {{P::Immersion, T}, {P::Injective, T}, {P::Induction, F}},
                 {"IMMERSION: the velocity (cos t, 2 cos 2t) never vanishes",
                  "INJECTIVE: the crossing point is reached only at t = pi",
                  "INDUCTION: a path through the crossing can switch branches while its image stays smooth"},
                 std::nullopt,
                 "figure_eight_speed",
                 expected_of({{P::Immersion, T}, {P::Injective, T}, {P::LocallyInjective, T},
                              {P::PseudoImmersion, T}, {P::Induction, F}, {P::LocalInduction, T},
                              {P::WeakEmbedding, F}})});

    e.push_back({"circle",
                 "t -> (sin t, cos t) for t in R",
                 {{P::Immersion, T}, {P::Injective, F}, {P::LocallyInjective, T}},
                 {"IMMERSION: unit speed", "INJECTIVE: 2*pi-periodic",
                  "LOCALLY_INJECTIVE: injective on every interval shorter than 2*pi"},
                 std::nullopt,
                 "circle_period",
                 expected_of({{P::Immersion, T}, {P::Injective, F}, {P::LocallyInjective, T},
                              {P::PseudoImmersion, T}, {P::Induction, F}, {P::LocalInduction, T},
                              {P::WeakEmbedding, F}})});

    e.push_back({"joris_preissmann_h",
                 "h(x,y) = (x^2, x^3 - x e^{-1/|y|}, y) for y != 0 and (x^2, x^3, 0) for y = 0",
                 {{P::PseudoImmersion, T}, {P::LocallyInjective, F}},
                 {"PSEUDO_IMMERSION: Joris and Preissmann",
                  "LOCALLY_INJECTIVE: h(e^{-1/(2|t|)}, t) = h(-e^{-1/(2|t|)}, t) for every t != 0"},
                 std::nullopt,
                 "h_noninjective",
                 expected_of({{P::Immersion, F}, {P::Injective, F}, {P::LocallyInjective, F},
                              {P::PseudoImmersion, T}, {P::Induction, F}, {P::LocalInduction, F},
                              {P::WeakEmbedding, F}})});

    e.push_back({"irrational_line",
                 "t -> [t, sqrt(2) t] into the torus R^2/Z^2",
                 {{P::WeakEmbedding, T}},
                 {"WEAK_EMBEDDING: leaf of a linear foliation of the torus"},
                 std::nullopt,
                 std::nullopt,
                 expected_of({{P::Immersion, T}, {P::Injective, T}, {P::LocallyInjective, T},
                              {P::PseudoImmersion, T}, {P::Induction, T}, {P::LocalInduction, T},
                              {P::WeakEmbedding, T}})});
    return e;
  }();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

const std::vector<ProseEntry>& prose_entries() {
  static const std::vector<ProseEntry> entries = {
      {"axes_union",
       "x-axis together with the open positive y-axis in R^2: uniquely immersed but not a "
       "diffeological submanifold"},
      {"topologists_sine_curve",
       "{x = 0} together with {y = sin(1/x)} in R^2: weakly embedded but not embedded"},
  };
  return entries;
}

namespace {

std::vector<std::string> run_numeric_check(const std::string& id, bool& ok) {
  std::vector<std::string> ev;
  char buf[160];
  if (id == "h_noninjective") {
    for (double t : {0.1, 0.25, 0.5, 1.0}) {
      const auto r = verify_h_noninjective(t);
      const bool pass = r.image_distance <= 1e-14 && r.preimage_separation > 0;
      ok = ok && pass;
      std::snprintf(buf, sizeof buf, "t=%.2f image distance %.3g, preimage separation %.10f", t,
                    r.image_distance, r.preimage_separation);
      ev.emplace_back(buf);
    }
  } else if (id == "circle_period") {
    const double a = 0.3;
    const double d = std::hypot(std::sin(a) - std::sin(a + 2 * std::numbers::pi),
                                std::cos(a) - std::cos(a + 2 * std::numbers::pi));
    ok = ok && d < 1e-12;
    std::snprintf(buf, sizeof buf, "|c(0.3) - c(0.3 + 2pi)| = %.3g", d);
    ev.emplace_back(buf);
  } else if (id == "figure_eight_speed") {
    double min_speed = INFINITY;
    for (int i = 1; i < 20000; ++i) {
      const double t = 2 * std::numbers::pi * i / 20000.0;
      min_speed = std::min(min_speed, std::hypot(std::cos(t), 2 * std::cos(2 * t)));
    }
    ok = ok && min_speed > 0.1;
    std::snprintf(buf, sizeof buf, "minimum sampled speed %.6f", min_speed);
    ev.emplace_back(buf);
  } else if (id == "cusp_curve") {
    const auto& c = *find_entry("cusp")->curve;
    const auto imm = curves::immersion_test(c);
    const auto inj = curves::injectivity_test(c);
    const auto mono = classify_monomial(3, 2);
    const bool pass = imm.value == Truth::False && !imm.witness.empty() && imm.witness[0].exact() &&
                      imm.witness[0].lo == 0 && inj.value == Truth::True &&
                      mono.facts[Predicate::Induction] == Truth::True;
    ok = ok && pass;
    ev.push_back("immersion_test: " + std::string(jetworks::to_string(imm.value)) +
                 (imm.witness.empty() ? "" : " at t=" + jetworks::to_string(imm.witness[0].lo)));
    ev.push_back("injectivity_test: " + std::string(jetworks::to_string(inj.value)));
    ev.push_back("monomial rule (3,2): INDUCTION " +
                 std::string(jetworks::to_string(mono.facts[Predicate::Induction])));
  }
  return ev;
}

}  // namespace

CatalogCheck check_entry(const CatalogEntry& entry) {
  FactSet seeds;
  for (const auto& [p, v] : entry.seeds) seeds.set(p, v);
  CatalogCheck out{entry.name, infer_closure(seeds), false, {}};
  out.matches_expected = !out.closure.contradiction && out.closure.facts == entry.expected;
  if (entry.numeric_check) {
    bool ok = true;
    out.evidence = run_numeric_check(*entry.numeric_check, ok);
    out.matches_expected = out.matches_expected && ok;
  }
  return out;
}

std::array<double, 3> joris_preissmann_h(double x, double y) {
  if (y == 0.0) return {x * x, x * x * x, 0.0};
  return {x * x, x * x * x - x * std::exp(-1.0 / std::fabs(y)), y};
}

HReport verify_h_noninjective(double t) {
  if (!(t > 0.0 && t <= 1.0)) throw Error(ErrorKind::InvalidArgument, "t must lie in (0, 1]");
  const double x = std::exp(-1.0 / (2.0 * t));
  HReport r{t, joris_preissmann_h(x, t), joris_preissmann_h(-x, t), 0.0, 2.0 * x};
  double sq = 0.0;
  for (std::size_t i = 0; i < 3; ++i) sq += (r.image_plus[i] - r.image_minus[i]) * (r.image_plus[i] - r.image_minus[i]);
  r.image_distance = std::sqrt(sq);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Exponent of a single-term polynomial c*t^k with k >= 1.
std::optional<unsigned> monomial_exponent(const Polynomial& p) {
  if (p.degree() < 1) return std::nullopt;
  for (int i = 0; i < p.degree(); ++i)
    if (p.coeffs()[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return static_cast<unsigned>(p.degree());
}

}  // namespace

CurveClassification classify_curve(const curves::PlaneCurve& c, const curves::CurveOptions& opts) {
  CurveClassification out;
  out.immersion = curves::immersion_test(c);
  out.injectivity = curves::injectivity_test(c, opts);
  out.seeds.set(Predicate::Immersion, out.immersion.value);
  out.seeds.set(Predicate::Injective, out.injectivity.value);

  const bool whole_line = !c.domain.lo && !c.domain.hi;
  const auto a = monomial_exponent(c.x), b = monomial_exponent(c.y);
  if (whole_line && a && b) {
    out.monomial = std::make_pair(*a, *b);
    out.seeds.set(Predicate::Induction, from_bool(std::gcd(*a, *b) == 1));
  }
  out.closure = infer_closure(out.seeds);
  return out;
}

}  // namespace jetworks::taxonomy
