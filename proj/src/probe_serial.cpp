#include <cmath>

#include "probe_kernels.hpp"

namespace jetworks::probe::detail {

double int_pow(double x, unsigned e) {
  double r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

double odd_root_one(double v, unsigned o) {
  if (v == 0 || o == 1) return v;
  double g = std::copysign(std::pow(std::fabs(v), 1.0 / o), v);
  const double d = o * int_pow(g, o - 1);
  if (d != 0 && std::isfinite(d)) g -= (int_pow(g, o) - v) / d;
  return g;
}

namespace {

void odd_root(const double* v, std::size_t n, unsigned o, double* g) {
  for (std::size_t i = 0; i < n; ++i) g[i] = odd_root_one(v[i], o);
}

ArgMax max_abs(const double* v, std::size_t n) {
  ArgMax best;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(v[i]);
    if (a > best.value) best = {a, i};
  }
  return best;
}

ArgMax power_residual(const double* g, const double* v, std::size_t n, unsigned e) {
  ArgMax best;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(int_pow(g[i], e) - v[i]);
    if (a > best.value) best = {a, i};
  }
  return best;
}

void stencil(const double* v, const std::vector<double>& w, std::size_t stride, double scale,
             std::size_t first, std::size_t count, double* out) {
  const std::size_t p = w.size() / 2;
  for (std::size_t k = 0; k < count; ++k) {
    const double* c = v + first + k - p * stride;
    double acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * c[j * stride];
    out[k] = acc * scale;
  }
}

ArgMax max_abs_diff(const double* a, const double* b, std::size_t n) {
  ArgMax best;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > best.value) best = {d, i};
  }
  return best;
}

}  // namespace

const Kernels& serial_kernels() {
  static const Kernels k{odd_root, max_abs, power_residual, stencil, max_abs_diff};
  return k;
}

}  // namespace jetworks::probe::detail
