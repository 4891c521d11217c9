#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jetworks/curves.hpp"
#include "jetworks/truth.hpp"

namespace jetworks::taxonomy {

enum class Predicate : std::size_t {
  Immersion,
  Injective,
  LocallyInjective,
  PseudoImmersion,
  Induction,
  LocalInduction,
  WeakEmbedding,
  TopologicalEmbedding,
};

inline constexpr std::size_t kPredicateCount = 8;

std::string_view to_string(Predicate p) noexcept;
std::optional<Predicate> predicate_from_string(std::string_view name) noexcept;
constexpr std::array<Predicate, kPredicateCount> all_predicates() {
  return {Predicate::Immersion,       Predicate::Injective,     Predicate::LocallyInjective,
          Predicate::PseudoImmersion, Predicate::Induction,     Predicate::LocalInduction,
          Predicate::WeakEmbedding,   Predicate::TopologicalEmbedding};
}

// Three-valued assignment over the map predicates; everything starts UNKNOWN.
class FactSet {
 public:
  FactSet() { values_.fill(Truth::Unknown); }
  FactSet(std::initializer_list<std::pair<Predicate, Truth>> seeds);

  Truth get(Predicate p) const { return values_[static_cast<std::size_t>(p)]; }
  void set(Predicate p, Truth v) { values_[static_cast<std::size_t>(p)] = v; }
  Truth operator[](Predicate p) const { return get(p); }

  std::size_t known_count() const;
  bool operator==(const FactSet&) const = default;

 private:
  std::array<Truth, kPredicateCount> values_;
};

// A literal is a predicate with a polarity; a rule derives `conclusion`
// when every premise holds.
struct Literal {
  Predicate pred;
  bool value;
};

struct Rule {
  std::string_view id;
  std::vector<Literal> premises;
  Literal conclusion;
};

// R1..R8 of the inclusion lattice with their contrapositives expanded.
const std::vector<Rule>& rules();

struct Closure {
  FactSet facts;
  bool contradiction = false;
  std::string conflict;  // rule id and predicate when contradictory
};

// Least fixpoint of the rules. `order`, when given, permutes the rule
// application order; the fixpoint must not depend on it.
Closure infer_closure(const FactSet& seeds, const std::vector<std::size_t>* order = nullptr);

// t -> (t^a, t^b) on R.
Closure classify_monomial(unsigned a, unsigned b);

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::pair<Predicate, Truth>> seeds;
  std::vector<std::string> citations;
  std::optional<curves::PlaneCurve> curve;
  std::optional<std::string> numeric_check;
  FactSet expected;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* find_entry(std::string_view name);

// Subsets mentioned only as prose; they carry no facts.
struct ProseEntry {
  std::string name;
  std::string description;
};
const std::vector<ProseEntry>& prose_entries();

struct CatalogCheck {
  std::string name;
  Closure closure;
  bool matches_expected;
  std::vector<std::string> evidence;
  bool passed() const { return !closure.contradiction && matches_expected; }
};

CatalogCheck check_entry(const CatalogEntry& entry);

// h(x, y) = (x^2, x^3 - x e^{-1/|y|}, y) for y != 0, (x^2, x^3, 0) otherwise.
std::array<double, 3> joris_preissmann_h(double x, double y);

struct HReport {
  double t;
  std::array<double, 3> image_plus;
  std::array<double, 3> image_minus;
  double image_distance;
  double preimage_separation;  // 2 e^{-1/(2t)}
};

// Evaluates h at (+-e^{-1/(2t)}, t); 0 < t <= 1.
HReport verify_h_noninjective(double t);

// Exact classification of a polynomial curve: immersion and injectivity by
// the curve tests, induction by the monomial rule when it applies.
struct CurveClassification {
  curves::ThreeValued immersion;
  curves::ThreeValued injectivity;
  std::optional<std::pair<unsigned, unsigned>> monomial;
  FactSet seeds;
  Closure closure;
};

CurveClassification classify_curve(const curves::PlaneCurve& c, const curves::CurveOptions& opts = {});

}  // namespace jetworks::taxonomy
