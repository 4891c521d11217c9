#include "jetworks/probe.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <string_view>

#include "jetworks/error.hpp"
#include "jetworks/numsg.hpp"
#include "jetworks/rational.hpp"
#include "probe_kernels.hpp"

namespace jetworks::probe {

namespace detail {
namespace {

using Index = std::ptrdiff_t;

void merge(ArgMax& into, const ArgMax& other) {
  if (other.value > into.value || (other.value == into.value && other.index < into.index)) into = other;
}

void odd_root(const double* v, std::size_t n, unsigned o, double* g) {
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < static_cast<Index>(n); ++i) g[i] = odd_root_one(v[i], o);
}

template <class F>
ArgMax parallel_argmax(std::size_t n, F value) {
  ArgMax best;
#pragma omp parallel
  {
    ArgMax local;
#pragma omp for schedule(static) nowait
    for (Index i = 0; i < static_cast<Index>(n); ++i) {
      const double a = value(static_cast<std::size_t>(i));
      if (a > local.value) local = {a, static_cast<std::size_t>(i)};
    }
#pragma omp critical(jetworks_probe_argmax)
    merge(best, local);
  }
  return best;
}

ArgMax max_abs(const double* v, std::size_t n) {
  return parallel_argmax(n, [v](std::size_t i) { return std::fabs(v[i]); });
}

ArgMax power_residual(const double* g, const double* v, std::size_t n, unsigned e) {
  return parallel_argmax(n, [=](std::size_t i) { return std::fabs(int_pow(g[i], e) - v[i]); });
}

void stencil(const double* v, const std::vector<double>& w, std::size_t stride, double scale,
             std::size_t first, std::size_t count, double* out) {
  const std::size_t p = w.size() / 2;
#pragma omp parallel for schedule(static)
  for (Index k = 0; k < static_cast<Index>(count); ++k) {
    const double* c = v + first + static_cast<std::size_t>(k) - p * stride;
    double acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * c[j * stride];
    out[k] = acc * scale;
  }
}

ArgMax max_abs_diff(const double* a, const double* b, std::size_t n) {
  return parallel_argmax(n, [=](std::size_t i) { return std::fabs(a[i] - b[i]); });
}

}  // namespace

const Kernels& parallel_kernels() {
  static const Kernels k{odd_root, max_abs, power_residual, stencil, max_abs_diff};
  return k;
}

}  // namespace detail

namespace {

const detail::Kernels& kernels(const ProbeConfig& cfg) {
  return cfg.backend == Backend::Serial ? detail::serial_kernels() : detail::parallel_kernels();
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

void SampleSeries::validate() const {
  if (!(h > 0) || !std::isfinite(h) || !std::isfinite(t0))
    throw Error(ErrorKind::InvalidArgument, "grid step must be positive and finite");
  if (values.size() < 5) throw Error(ErrorKind::TooShort, "a series needs at least 5 samples");
  if (values.size() % 2 == 0) throw Error(ErrorKind::InvalidArgument, "a series needs an odd number of samples");
  for (double v : values)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "samples must be finite");
}

SampleSeries sample(double lo, double hi, std::size_t n, double (*f)(double)) {
  if (n < 2 || !(hi > lo)) throw Error(ErrorKind::InvalidArgument, "need lo < hi and at least two points");
  SampleSeries s{lo, (hi - lo) / static_cast<double>(n - 1), {}};
  s.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.values[i] = f(s.t(i));
  return s;
}

Recovery recover_pointwise(const SampleSeries& a, const SampleSeries& b, unsigned m, unsigned n,
                           const ProbeConfig& cfg) {
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidArgument, "exponents must be positive");
  if (numsg::gcd(m, n) != 1) throw Error(ErrorKind::CoprimeRequired, "gcd(m, n) must be 1");
  a.validate();
  b.validate();
  if (a.size() != b.size() || a.t0 != b.t0 || a.h != b.h)
    throw Error(ErrorKind::GridMismatch, "the two series are sampled on different grids");

  // Root of the odd power; with both odd the smaller exponent is better conditioned.
  const bool use_a = m % 2 == 1 && (n % 2 == 0 || m <= n);
  const SampleSeries& odd = use_a ? a : b;
  const SampleSeries& other = use_a ? b : a;
  const unsigned o = use_a ? m : n, e = use_a ? n : m;
  const auto& k = kernels(cfg);
  const std::size_t len = a.size();

  Recovery r{{a.t0, a.h, std::vector<double>(len)}, 0, o};
  k.odd_root(odd.values.data(), len, o, r.g.values.data());

  const double odd_scale = std::max(k.max_abs(odd.values.data(), len).value, cfg.abs_floor);
  const auto back = k.power_residual(r.g.values.data(), odd.values.data(), len, o);
  if (!(back.value <= cfg.roundtrip_tol * odd_scale))
    throw Error(ErrorKind::InconsistentSamples,
                "odd channel does not survive re-powering at t=" + format_double(odd.t(back.index)));

  const double scale = std::max(k.max_abs(other.values.data(), len).value, cfg.abs_floor);
  const auto res = k.power_residual(r.g.values.data(), other.values.data(), len, e);
  r.residual = res.value / scale;
  if (!(r.residual <= cfg.consistency_tol))
    throw Error(ErrorKind::InconsistentSamples, "relative residual " + format_double(r.residual) +
                                                    " exceeds tolerance at t=" + format_double(odd.t(res.index)));
  return r;
}

std::vector<double> stencil_weights(unsigned sigma, unsigned p) {
  if (sigma > 2 * p) throw Error(ErrorKind::InvalidArgument, "stencil too narrow for the derivative order");
  // Solve sum_j w_j j^k = sigma! [k == sigma] for k = 0..2p exactly.
  const std::size_t w = 2 * p + 1;
  std::vector<std::vector<Rational>> m(w, std::vector<Rational>(w + 1));
  for (std::size_t k = 0; k < w; ++k) {
    for (std::size_t j = 0; j < w; ++j) {
      Rational x = 1;
      const Rational off = static_cast<long>(j) - static_cast<long>(p);
      for (std::size_t e = 0; e < k; ++e) x *= off;
      m[k][j] = x;
    }
  }
  Rational fact = 1;
  for (unsigned i = 2; i <= sigma; ++i) fact *= i;
  m[sigma][w] = fact;
  for (std::size_t c = 0; c < w; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    for (std::size_t r = 0; r < w; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= w; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<double> out(w);
  for (std::size_t j = 0; j < w; ++j) out[j] = Rational(m[j][w] / m[j][j]).get_d();
  return out;
}

std::string SmoothnessReport::verdict() const {
  if (smooth) return "SMOOTH_UP_TO(" + std::to_string(order) + ")";
  return "NONSMOOTH_AT(" + std::to_string(order) + ", t=" + format_double(location) + ")";
}

SmoothnessReport estimate_derivatives(const SampleSeries& s, unsigned max_order, const ProbeConfig& cfg) {
  s.validate();
  const std::size_t len = s.size();
  if (max_order == 0 || max_order > 6)
    throw Error(ErrorKind::InvalidArgument, "max order must be between 1 and 6");
  if (max_order > (len - 1) / 2) throw Error(ErrorKind::TooShort, "series too short for the requested order");

  const auto& k = kernels(cfg);
  const std::size_t s0 = std::max<std::size_t>(1, (len - 1) / std::max<std::size_t>(1, cfg.target_cells));
  const double eps = std::numeric_limits<double>::epsilon();
  const double fmax = k.max_abs(s.values.data(), len).value;

  SmoothnessReport rep;
  rep.order = max_order;
  for (unsigned sigma = 1; sigma <= max_order; ++sigma) {
    // Fourth-order accurate central stencil, applied at strides 4H, 2H, H.
    const unsigned p = (sigma + 1) / 2 + 1;
    const std::vector<double> w = stencil_weights(sigma, p);
    const std::size_t reach = 4 * s0 * p;
    if (2 * reach >= len) throw Error(ErrorKind::TooShort, "series too short for the requested order");
    const std::size_t first = reach, count = len - 2 * reach;

    std::vector<double> d[3];
    const std::size_t strides[3] = {4 * s0, 2 * s0, s0};
    for (int i = 0; i < 3; ++i) {
      d[i].resize(count);
      const double scale = 1.0 / std::pow(static_cast<double>(strides[i]) * s.h, sigma);
      k.stencil(s.values.data(), w, strides[i], scale, first, count, d[i].data());
    }
    const auto coarse = k.max_abs(d[0].data(), count);
    const auto change1 = k.max_abs_diff(d[1].data(), d[0].data(), count);
    const auto change2 = k.max_abs_diff(d[2].data(), d[1].data(), count);

    double wsum = 0;
    for (double x : w) wsum += std::fabs(x);
    const double noise = 64 * eps * fmax * wsum / std::pow(static_cast<double>(s0) * s.h, sigma) + 1e-9 * coarse.value;

    DerivativeRow row;
    row.order = sigma;
    row.max_abs_estimate = k.max_abs(d[2].data(), count).value;
    row.contraction = change2.value > 0 ? change1.value / change2.value : std::numeric_limits<double>::infinity();
    row.blowup = change2.value > noise && change2.value * cfg.min_contraction > change1.value;
    row.location = s.t(first + change2.index);
    row.step = static_cast<double>(s0) * s.h;
    row.first_index = first;
    row.estimates = std::move(d[2]);
    if (row.blowup && rep.smooth) {
      rep.smooth = false;
      rep.order = sigma;
      rep.location = row.location;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

DemoReport joris_demo(DemoKind kind, unsigned m, unsigned n, const SampleSeries* custom, unsigned max_order,
                      const ProbeConfig& cfg) {
  if (m == 0 || n == 0 || numsg::gcd(m, n) != 1) throw Error(ErrorKind::CoprimeRequired, "gcd(m, n) must be 1");
  SampleSeries g;
  switch (kind) {
    case DemoKind::Identity: g = sample(-1, 1, 2001, [](double t) { return t; }); break;
    case DemoKind::Abs: g = sample(-1, 1, 2001, [](double t) { return std::fabs(t); }); break;
    case DemoKind::Custom:
      if (!custom) throw Error(ErrorKind::InvalidArgument, "custom demo needs samples");
      g = *custom;
      break;
  }
  g.validate();
  SampleSeries gm{g.t0, g.h, g.values}, gn{g.t0, g.h, g.values};
  for (double& v : gm.values) v = detail::int_pow(v, m);
  for (double& v : gn.values) v = detail::int_pow(v, n);

  DemoReport out;
  out.recovery = recover_pointwise(gm, gn, m, n, cfg);
  out.report = estimate_derivatives(out.recovery.g, max_order, cfg);
  out.input_m = estimate_derivatives(gm, max_order, cfg);
  out.input_n = estimate_derivatives(gn, max_order, cfg);
  auto describe = [&](const char* name, const SmoothnessReport& r) {
    out.notes.push_back(std::string("input ") + name + (r.smooth ? " looks smooth: " : " is not smooth: ") +
                        r.verdict());
  };
  describe("g^m", out.input_m);
  describe("g^n", out.input_n);
  if (!out.report.smooth && !(out.input_m.smooth && out.input_n.smooth))
    out.notes.push_back("g fails smoothness and so does one of the powers");
  if (!out.report.smooth && out.input_m.smooth && out.input_n.smooth)
    out.notes.push_back("g flagged although both powers look smooth at this resolution");
  return out;
}

namespace {

double parse_field(std::string_view f, std::size_t line) {
  while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
  while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.remove_suffix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc() || ptr != f.data() + f.size() || f.empty())
    throw Error(ErrorKind::SyntaxError, "bad number on line " + std::to_string(line));
  return v;
}

}  // namespace

CsvSamples read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::SyntaxError, "empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,gm,gn") throw Error(ErrorKind::SyntaxError, "expected header t,gm,gn");

  std::vector<double> t, a, b;
  for (std::size_t no = 2; std::getline(in, line); ++no) {
    if (line.empty() || line == "\r") continue;
    const auto c1 = line.find(','), c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
      throw Error(ErrorKind::SyntaxError, "expected three fields on line " + std::to_string(no));
    const std::string_view v(line);
    t.push_back(parse_field(v.substr(0, c1), no));
    a.push_back(parse_field(v.substr(c1 + 1, c2 - c1 - 1), no));
    b.push_back(parse_field(v.substr(c2 + 1), no));
  }
  if (t.size() < 2) throw Error(ErrorKind::TooShort, "need at least two rows");
  const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  double tmax = 0;
  for (double x : t) tmax = std::max(tmax, std::fabs(x));
  const double tol = 1e-12 * std::max(1.0, tmax);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0 && !(t[i] > t[i - 1])) throw Error(ErrorKind::GridMismatch, "t must be strictly increasing");
    if (std::fabs(t[i] - (t.front() + static_cast<double>(i) * h)) > tol)
      throw Error(ErrorKind::GridMismatch, "t is not uniformly spaced");
  }
  CsvSamples out{{t.front(), h, std::move(a)}, {t.front(), h, std::move(b)}};
  out.gm.validate();
  out.gn.validate();
  return out;
}

}  // namespace jetworks::probe
