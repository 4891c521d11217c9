#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetworks/polynomial.hpp"
#include "jetworks/truth.hpp"

namespace jetworks::curves {

// t -> (x(t), y(t)) restricted to a parameter interval.
struct PlaneCurve {
  Polynomial x;
  Polynomial y;
  Interval domain;

  bool degenerate() const { return x.is_constant() && y.is_constant(); }
};

// A verdict with checkable evidence. For a FALSE immersion verdict the
// witness is one critical parameter; for a FALSE injectivity verdict it is
// the pair (s, t). Each entry is an exact rational or an isolating interval.
struct ThreeValued {
  Truth value = Truth::Unknown;
  std::vector<RealRoot> witness;
  std::string note;
};

struct CurveOptions {
  int max_degree = 20;
};

ThreeValued immersion_test(const PlaneCurve& c);
ThreeValued injectivity_test(const PlaneCurve& c, const CurveOptions& opts = {});

// Orders of vanishing of x - x(t0) and y - y(t0) at t0; nullopt for a
// constant component.
struct VanishingOrders {
  std::optional<int> x;
  std::optional<int> y;
};

VanishingOrders vanishing_orders(const PlaneCurve& c, const Rational& t0);

// True when both coordinates agree at two exact parameters.
bool is_coincidence(const PlaneCurve& c, const Rational& s, const Rational& t);

}  // namespace jetworks::curves
