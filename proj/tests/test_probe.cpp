#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gen.hpp"
#include "jetworks/error.hpp"
#include "jetworks/probe.hpp"

using namespace jetworks;
using namespace jetworks::probe;

namespace {

SampleSeries grid(std::size_t n, auto f) {
  SampleSeries s{-1, 2.0 / static_cast<double>(n - 1), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) s.values[i] = f(s.t(i));
  return s;
}

double ipow(double x, unsigned e) { return std::pow(x, static_cast<double>(e)); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

struct RandomPoly {
  std::vector<double> c;  // c[i] t^i
  double operator()(double t) const {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  double derivative(double t, unsigned k) const {
    double acc = 0;
    for (std::size_t i = k; i < c.size(); ++i) {
      double f = 1;
      for (std::size_t j = 0; j < k; ++j) f *= static_cast<double>(i - j);
      acc += c[i] * f * std::pow(t, static_cast<double>(i - k));
    }
    return acc;
  }
};

RandomPoly random_poly() {
  RandomPoly p;
  p.c.resize(static_cast<std::size_t>(gen::integer(1, 6)));
  for (auto& x : p.c) x = gen::real(-2, 2);
  return p;
}

std::size_t random_size() { return 2 * static_cast<std::size_t>(gen::integer(250, 2000)) + 1; }

}  // namespace

TEST_CASE("series validation") {
  CHECK_NOTHROW(grid(5, [](double t) { return t; }).validate());
  CHECK(kind_of([] { SampleSeries{0, 1, {1, 2, 3}}.validate(); }) == ErrorKind::TooShort);
  CHECK(kind_of([] { SampleSeries{0, 1, {1, 2, 3, 4, 5, 6}}.validate(); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { SampleSeries{0, 0, {1, 2, 3, 4, 5}}.validate(); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { SampleSeries{0, 1, {1, 2, NAN, 4, 5}}.validate(); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { SampleSeries{0, 1, {1, 2, INFINITY, 4, 5}}.validate(); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("stencil weights") {
  const auto w = stencil_weights(1, 1);
  CHECK(w[0] == -0.5);
  CHECK(w[1] == 0);
  CHECK(w[2] == 0.5);
  const auto w2 = stencil_weights(2, 2);  // (-1, 16, -30, 16, -1) / 12
  CHECK(w2[2] == doctest::Approx(-30.0 / 12));
  CHECK(w2[0] == doctest::Approx(-1.0 / 12));
  // Moments: sum w_j j^k = sigma! [k == sigma].
  for (unsigned s = 1; s <= 6; ++s) {
    const unsigned p = (s + 1) / 2 + 1;
    const auto v = stencil_weights(s, p);
    double fact = 1;
    for (unsigned i = 2; i <= s; ++i) fact *= i;
    for (unsigned k = 0; k <= 2 * p; ++k) {
      double m = 0;
      for (std::size_t j = 0; j < v.size(); ++j) m += v[j] * std::pow(static_cast<double>(j) - p, k);
      CHECK(m == doctest::Approx(k == s ? fact : 0.0).epsilon(1e-9).scale(1));
    }
  }
}

TEST_CASE("pointwise recovery examples") {
  const auto a = grid(2001, [](double t) { return t * t; });
  const auto b = grid(2001, [](double t) { return t * t * t; });
  const auto r = recover_pointwise(a, b, 2, 3);
  CHECK(r.root_exponent == 3);
  double err = 0;
  for (std::size_t i = 0; i < r.g.size(); ++i) err = std::max(err, std::fabs(r.g.values[i] - r.g.t(i)));
  CHECK(err < 1e-12);

  const auto b6 = grid(2001, [](double t) { return ipow(t, 6); });
  CHECK(kind_of([&] { recover_pointwise(a, b6, 2, 6); }) == ErrorKind::CoprimeRequired);

  const auto abs3 = grid(2001, [](double t) { return ipow(std::fabs(t), 3); });
  const auto r2 = recover_pointwise(a, abs3, 2, 3);
  CHECK(r2.residual < 1e-15);
  for (std::size_t i = 0; i < r2.g.size(); ++i) CHECK(r2.g.values[i] == doctest::Approx(std::fabs(r2.g.t(i))).epsilon(1e-14));

  const auto shifted = grid(2001, [](double t) { return t * t * t + 0.01; });
  CHECK(kind_of([&] { recover_pointwise(a, shifted, 2, 3); }) == ErrorKind::InconsistentSamples);
  const auto other = grid(2003, [](double t) { return t * t * t; });
  CHECK(kind_of([&] { recover_pointwise(a, other, 2, 3); }) == ErrorKind::GridMismatch);
  // Negative square: no real g.
  const auto neg = grid(2001, [](double t) { return -t * t - 1; });
  CHECK(kind_of([&] { recover_pointwise(neg, b, 2, 3); }) == ErrorKind::InconsistentSamples);
}

TEST_CASE("pointwise recovery round trip on random polynomials") {
  const std::pair<unsigned, unsigned> pairs[] = {{2, 3}, {3, 2}, {3, 5}, {2, 5}, {1, 2}, {3, 4}};
  for (int i = 0; i < 60; ++i) {
    const auto p = random_poly();
    const auto [m, n] = pairs[gen::integer(0, 5)];
    const std::size_t size = random_size();
    const auto g = grid(size, p);
    const auto a = grid(size, [&](double t) { return ipow(p(t), m); });
    const auto b = grid(size, [&](double t) { return ipow(p(t), n); });
    const auto r = recover_pointwise(a, b, m, n);
    double scale = 1e-300, err = 0;
    for (std::size_t k = 0; k < size; ++k) {
      scale = std::max(scale, std::fabs(g.values[k]));
      err = std::max(err, std::fabs(r.g.values[k] - g.values[k]));
    }
    CHECK(err <= 1e-12 * scale);
  }
}

TEST_CASE("derivative estimate examples") {
  const auto cube = grid(2001, [](double t) { return t * t * t; });
  auto rep = estimate_derivatives(cube, 4);
  CHECK(rep.smooth);
  CHECK(rep.order == 4);
  CHECK(rep.verdict() == "SMOOTH_UP_TO(4)");
  for (double d : rep.rows[2].estimates) CHECK(std::fabs(d - 6) < 1e-6);
  for (std::size_t k = 0; k < rep.rows[0].estimates.size(); ++k) {
    const double t = cube.t(rep.rows[0].first_index + k);
    CHECK(rep.rows[0].estimates[k] == doctest::Approx(3 * t * t).epsilon(1e-9).scale(1));
  }

  rep = estimate_derivatives(grid(2001, [](double t) { return std::fabs(t); }), 4);
  CHECK_FALSE(rep.smooth);
  CHECK(rep.order == 1);
  CHECK(std::fabs(rep.location) < 0.1);

  rep = estimate_derivatives(grid(2001, [](double t) { return ipow(std::fabs(t), 3); }), 4);
  CHECK_FALSE(rep.smooth);
  CHECK(rep.order == 3);
  CHECK(std::fabs(rep.location) < 0.1);
  CHECK_FALSE(rep.rows[0].blowup);
  CHECK_FALSE(rep.rows[1].blowup);

  // A jump in the second derivative.
  rep = estimate_derivatives(grid(2001, [](double t) { return t < 0 ? -t * t : t * t; }), 4);
  CHECK(rep.order == 2);
  rep = estimate_derivatives(grid(2001, [](double t) { return std::sin(3 * t); }), 6);
  CHECK(rep.smooth);
  CHECK(rep.order == 6);
}

TEST_CASE("derivative estimate preconditions") {
  const auto s = grid(11, [](double t) { return t; });
  CHECK(kind_of([&] { estimate_derivatives(s, 7); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { estimate_derivatives(s, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { estimate_derivatives(grid(5, [](double t) { return t; }), 3); }) == ErrorKind::TooShort);
  CHECK(kind_of([&] { estimate_derivatives(s, 2); }) == ErrorKind::TooShort);  // stride-4 stencil does not fit
  CHECK_NOTHROW(estimate_derivatives(grid(41, [](double t) { return t; }), 2));
}

TEST_CASE("polynomials are never flagged and their derivatives are accurate") {
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly();
    const std::size_t size = random_size();
    const auto s = grid(size, p);
    const auto rep = estimate_derivatives(s, 4);
    CHECK(rep.smooth);
    CHECK(rep.order == 4);
    const unsigned d = static_cast<unsigned>(p.c.size()) - 1;
    for (const auto& row : rep.rows) {
      if (row.order > std::min(d, 4u)) continue;
      double scale = 1e-300, err = 0;
      for (std::size_t k = 0; k < row.estimates.size(); ++k) {
        const double exact = p.derivative(s.t(row.first_index + k), row.order);
        scale = std::max(scale, std::fabs(exact));
        err = std::max(err, std::fabs(row.estimates[k] - exact));
      }
      CHECK(err <= 1e-5 * scale);
    }
  }
}

TEST_CASE("a flagged row forces the verdict") {
  for (int i = 0; i < 50; ++i) {
    const double c = gen::real(-0.5, 0.5);
    const unsigned k = static_cast<unsigned>(gen::integer(1, 4));
    // |t - c|^k for odd k, sign(t - c) |t - c|^k for even k.
    const auto s = grid(random_size(), [&](double t) {
      const double v = ipow(std::fabs(t - c), k);
      return k % 2 == 0 && t < c ? -v : v;
    });
    const auto rep = estimate_derivatives(s, 5);
    for (const auto& row : rep.rows)
      if (row.blowup) CHECK((!rep.smooth && rep.order <= row.order));
    // The k-th derivative jumps at c.
    CHECK_FALSE(rep.smooth);
    CHECK(rep.order <= k);
    CHECK(std::fabs(rep.location - c) < 0.1);
  }
}

TEST_CASE("one even power does not certify smoothness") {
  const auto g2 = grid(2001, [](double t) { return t * t; });
  CHECK(estimate_derivatives(g2, 4).smooth);
  const auto g = grid(2001, [](double t) { return std::fabs(t); });
  const auto rep = estimate_derivatives(g, 4);
  CHECK_FALSE(rep.smooth);
  CHECK(rep.order <= 3);
}

TEST_CASE("demos") {
  auto d = joris_demo(DemoKind::Identity, 2, 3);
  CHECK(d.report.verdict() == "SMOOTH_UP_TO(4)");
  d = joris_demo(DemoKind::Abs, 2, 3);
  CHECK_FALSE(d.report.smooth);
  CHECK(d.report.order <= 3);
  CHECK_FALSE(d.input_n.smooth);
  CHECK(d.input_m.smooth);
  bool noted = false;
  for (const auto& n : d.notes) noted = noted || n.find("g^n is not smooth") != std::string::npos;
  CHECK(noted);
  CHECK(joris_demo(DemoKind::Identity, 3, 5).report.verdict() == "SMOOTH_UP_TO(4)");
  CHECK(kind_of([] { joris_demo(DemoKind::Identity, 2, 4); }) == ErrorKind::CoprimeRequired);
  const auto custom = grid(1001, [](double t) { return std::exp(t); });
  CHECK(joris_demo(DemoKind::Custom, 3, 2, &custom).report.smooth);
  CHECK(kind_of([] { joris_demo(DemoKind::Custom, 3, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  ProbeConfig par, ser;
  ser.backend = Backend::Serial;
  for (int i = 0; i < 20; ++i) {
    const auto p = random_poly();
    const std::size_t size = random_size();
    ProbeConfig fine_par = par, fine_ser = ser;
    fine_par.target_cells = fine_ser.target_cells = size - 1;
    const auto a = grid(size, [&](double t) { return ipow(p(t), 2) + (i % 2 ? std::fabs(t) : 0.0); });
    const auto b = grid(size, [&](double t) { return ipow(p(t), 3); });
    for (const auto* cfg : {&par, &fine_par}) {
      const auto& other = cfg == &par ? ser : fine_ser;
      const auto r1 = estimate_derivatives(a, 4, *cfg), r2 = estimate_derivatives(a, 4, other);
      CHECK(r1.smooth == r2.smooth);
      CHECK(r1.order == r2.order);
      CHECK(r1.location == r2.location);
      for (std::size_t k = 0; k < r1.rows.size(); ++k) {
        CHECK(r1.rows[k].estimates == r2.rows[k].estimates);
        CHECK(r1.rows[k].max_abs_estimate == r2.rows[k].max_abs_estimate);
        CHECK(r1.rows[k].contraction == r2.rows[k].contraction);
      }
    }
    if (i % 2 == 0) {
      const auto g1 = recover_pointwise(a, b, 2, 3, par), g2 = recover_pointwise(a, b, 2, 3, ser);
      CHECK(g1.g.values == g2.g.values);
      CHECK(g1.residual == g2.residual);
    }
  }
}

TEST_CASE("csv input") {
  std::ostringstream os;
  os << "t,gm,gn\n";
  for (int i = 0; i <= 100; ++i) {
    const double t = -1 + i * 0.02;
    os << t << ',' << t * t << ',' << t * t * t << "\n";
  }
  os.precision(17);
  std::istringstream in(os.str());
  const auto csv = read_csv(in);
  CHECK(csv.gm.size() == 101);
  CHECK(csv.gm.h == doctest::Approx(0.02));
  CHECK(csv.gn.values[100] == doctest::Approx(1));

  std::istringstream bad_header("x,gm,gn\n0,0,0\n");
  CHECK(kind_of([&] { read_csv(bad_header); }) == ErrorKind::SyntaxError);
  std::istringstream bad_field("t,gm,gn\n0,0,zero\n");
  CHECK(kind_of([&] { read_csv(bad_field); }) == ErrorKind::SyntaxError);
  std::istringstream uneven("t,gm,gn\n0,0,0\n0.1,0,0\n0.3,0,0\n0.4,0,0\n0.5,0,0\n");
  CHECK(kind_of([&] { read_csv(uneven); }) == ErrorKind::GridMismatch);
  std::istringstream decreasing("t,gm,gn\n0,0,0\n-1,0,0\n-2,0,0\n-3,0,0\n-4,0,0\n");
  CHECK(kind_of([&] { read_csv(decreasing); }) == ErrorKind::GridMismatch);
}
